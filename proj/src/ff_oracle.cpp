#include "gruler/ff_oracle.hpp"

#include <cstdlib>
#include <string>

#include "gruler/kernels.hpp"

namespace gruler {

OracleOptions OracleOptions::from_environment() {
  OracleOptions opts;
  if (const char* env = std::getenv("GRULER_MAX_SUPPORT")) {
    try {
      const long v = std::stol(env);
      if (v > 0) opts.max_support = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad GRULER_MAX_SUPPORT: ") + env);
    }
  }
  return opts;
}

ComponentTooLarge::ComponentTooLarge(std::int64_t degree, std::size_t support_size, std::size_t cap)
    : Error(ErrorCode::ComponentTooLarge,
            "component of degree " + std::to_string(degree) + " has support " +
                std::to_string(support_size) + " > cap " + std::to_string(cap)),
      degree_(degree),
      support_size_(support_size) {}

Component::Component(const ShiftBlock& b, std::int64_t degree, const PrimeField& field,
                     const OracleOptions& opts)
    : support_(component_support(b, degree)), q_(field.order()), size_(1) {
  if (support_.positions.size() > opts.max_support) {
    throw ComponentTooLarge(degree, support_.positions.size(), opts.max_support);
  }
  for (std::size_t k = 0; k < support_.positions.size(); ++k) size_ *= q_;
}

void Component::coords(std::uint64_t index, std::vector<std::uint8_t>& out) const {
  const std::size_t len = support_.positions.size();
  out.resize(len);
  for (std::size_t k = len; k-- > 0;) {
    out[k] = static_cast<std::uint8_t>(index % q_);
    index /= q_;
  }
}

HomogeneousMatrix Component::at(std::uint64_t index) const {
  std::vector<std::uint8_t> c;
  coords(index, c);
  HomogeneousMatrix x{support_.degree, CoeffMatrix::zero(support_.n)};
  for (std::size_t k = 0; k < c.size(); ++k) {
    x.coeffs.at(support_.positions[k].row, support_.positions[k].col) =
        static_cast<PrimeField::Elem>(c[k]);
  }
  return x;
}

Component enumerate_component(const ShiftBlock& b, std::int64_t degree, unsigned q,
                              const OracleOptions& opts) {
  return Component(b, degree, PrimeField(q), opts);
}

bool is_invertible_hom(const HomogeneousMatrix& x, const PrimeField& field) {
  return determinant(x.coeffs, field) != 0;
}

std::vector<std::int64_t> oracle_degrees(const ShiftBlock& b) { return nonzero_degrees(b); }

std::int64_t partner_degree(const ShiftBlock& b, std::int64_t degree) {
  return b.is_laurent() ? floor_mod(-degree, b.period) : -degree;
}

void check_caps(const ShiftBlock& b, const OracleOptions& opts) {
  for (auto d : oracle_degrees(b)) {
    const auto s = component_support(b, d).positions.size();
    if (s > opts.max_support) throw ComponentTooLarge(d, s, opts.max_support);
  }
}

namespace {

enum class Candidates { All, Invertible };

kernels::CandidatePlanes materialize(const Component& c, const PrimeField& f, Candidates which) {
  kernels::CandidatePlanes planes(c.support().positions.size());
  std::vector<std::uint8_t> coords;
  for (std::uint64_t i = 0; i < c.size(); ++i) {
    if (which == Candidates::Invertible && !is_invertible_hom(c.at(i), f)) continue;
    c.coords(i, coords);
    planes.push_back(coords);
  }
  return planes;
}

HomogeneousMatrix from_coords(const Component& c, const kernels::CandidatePlanes& planes,
                              std::size_t index) {
  HomogeneousMatrix y{c.degree(), CoeffMatrix::zero(c.dim())};
  const auto& pos = c.support().positions;
  for (std::size_t p = 0; p < pos.size(); ++p) {
    y.coeffs.at(pos[p].row, pos[p].col) = static_cast<PrimeField::Elem>(planes.at(index, p));
  }
  return y;
}

// Linearizes U -> left * U * right == target over the candidate support.
// Output (i, j) has coefficient left[i][k] * right[l][j] on term (k, l).
kernels::LinearCheck linearize(const CoeffMatrix& left, const CoeffMatrix& right,
                               const CoeffMatrix& target, const ComponentSupport& cand_support,
                               const PrimeField& f) {
  const std::size_t n = left.n;
  const auto& pos = cand_support.positions;
  kernels::LinearCheck chk;
  chk.q = static_cast<std::uint8_t>(f.order());
  chk.terms = pos.size();
  std::vector<std::uint8_t> row(pos.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool any = false;
      for (std::size_t p = 0; p < pos.size(); ++p) {
        row[p] = f.mul(left.at(i, pos[p].row), right.at(pos[p].col, j));
        any = any || row[p] != 0;
      }
      const auto t = target.at(i, j);
      if (!any && t == 0) continue;  // 0 == 0 for every candidate
      chk.coeff.insert(chk.coeff.end(), row.begin(), row.end());
      chk.target.push_back(t);
    }
  }
  return chk;
}

// Shared driver for the regular / unit-regular checks: every x needs a
// partner-degree y (from `which`) with x y x = x.
OracleVerdict check_inner_inverse(const ShiftBlock& b, unsigned q, const OracleOptions& opts,
                                  Candidates which) {
  check_caps(b, opts);
  const PrimeField f(q);
  for (auto d : oracle_degrees(b)) {
    const Component xs(b, d, f, opts);
    const Component ys(b, partner_degree(b, d), f, opts);
    const auto planes = materialize(ys, f, which);
    // Element 0 is the zero matrix, which u = 1 handles in any degree.
    for (std::uint64_t i = 1; i < xs.size(); ++i) {
      auto x = xs.at(i);
      const auto chk = linearize(x.coeffs, x.coeffs, x.coeffs, ys.support(), f);
      if (!kernels::first_match(chk, planes)) return {false, std::move(x), std::nullopt};
    }
  }
  return {};
}

}  // namespace

OracleVerdict check_graded_regular(const ShiftBlock& b, unsigned q, const OracleOptions& opts) {
  return check_inner_inverse(b, q, opts, Candidates::All);
}

OracleVerdict check_graded_unit_regular(const ShiftBlock& b, unsigned q,
                                        const OracleOptions& opts) {
  return check_inner_inverse(b, q, opts, Candidates::Invertible);
}

OracleVerdict check_graded_directly_finite(const ShiftBlock& b, unsigned q,
                                           const OracleOptions& opts) {
  check_caps(b, opts);
  const PrimeField f(q);
  const auto one = CoeffMatrix::identity(b.size());
  for (auto d : oracle_degrees(b)) {
    const Component xs(b, d, f, opts);
    const Component ys(b, partner_degree(b, d), f, opts);
    const auto planes = materialize(ys, f, Candidates::All);
    for (std::uint64_t i = 0; i < xs.size(); ++i) {
      auto x = xs.at(i);
      const auto chk = linearize(x.coeffs, one, one, ys.support(), f);
      for (std::size_t yi : kernels::all_matches(chk, planes)) {
        auto y = from_coords(ys, planes, yi);
        if (multiply(y.coeffs, x.coeffs, f) != one) return {false, std::move(x), std::move(y)};
      }
    }
  }
  return {};
}

}  // namespace gruler
