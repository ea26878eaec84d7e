#include "flagclass/chevalley.hpp"

#include <map>
#include <sstream>

#include "flagclass/error.hpp"

namespace flagclass {

namespace {

// Memoized evaluation of Chevalley constants N_{a,b} following the standard
// extraspecial-pair recursion: every positive pair is reduced through the
// four-root relation to pairs whose sum has smaller height.
class ChevalleySolver {
 public:
  explicit ChevalleySolver(const RootSystem& rs)
      : rs_(rs), n_(rs.size()), np_(rs.num_positive()), memo_(static_cast<std::size_t>(n_) * n_, kUnknown),
        extra_of_(np_, {-1, -1}) {
    for (int xi = 0; xi < np_; ++xi) {
      if (rs_.root(xi).height() == 1) continue;
      for (int a = 0; a < np_; ++a) {
        auto b = rs_.index_of(rs_.root(xi) - rs_.root(a));
        if (b && *b < np_) {
          extra_of_[xi] = {a, *b};
          break;
        }
      }
    }
  }

  const std::vector<std::pair<int, int>>& extraspecial() const { return extra_of_; }

  int value(int a, int b) {
    int s = rs_.sum_index(a, b);
    if (s < 0) return 0;
    bool pa = a < np_;
    bool pb = b < np_;
    if (pa && pb) return positive(a, b);
    if (!pa && !pb) return -positive(rs_.negation(a), rs_.negation(b));
    // Mixed signs: rotate the zero-sum triple (a, b, c) to a same-sign pair.
    int c = rs_.negation(s);
    bool pc = c < np_;
    if (pb == pc) {
      // N_{a,b} / (c,c) = N_{b,c} / (a,a)
      return scaled(value(b, c), rs_.norm2(c), rs_.norm2(a));
    }
    // N_{a,b} / (c,c) = N_{c,a} / (b,b)
    return scaled(value(c, a), rs_.norm2(c), rs_.norm2(b));
  }

 private:
  static constexpr int kUnknown = 1 << 30;

  static int scaled(int v, const Rational& num, const Rational& den) {
    Rational r = Rational(v) * num / den;
    if (!r.is_integer()) throw Error(ErrorKind::InvariantViolation, "non-integral Chevalley constant");
    return static_cast<int>(r.num());
  }

  int string_p(int a, int b) const {
    int p = 0;
    while (rs_.contains(rs_.root(b) - (p + 1) * rs_.root(a))) ++p;
    return p;
  }

  int positive(int a, int b) {
    int& slot = memo_[static_cast<std::size_t>(a) * n_ + b];
    if (slot != kUnknown) return slot;
    int xi = rs_.sum_index(a, b);
    auto [a1, b1] = extra_of_[xi];
    int result;
    if (a == a1 && b == b1) {
      result = string_p(a1, b1) + 1;
    } else if (a == b1 && b == a1) {
      result = -(string_p(a1, b1) + 1);
    } else {
      // Four-root relation with (a, b, -a1, -b1):
      // N_{a,b}N_{g,d}/(a+b)^2 + N_{b,g}N_{a,d}/(b+g)^2 + N_{g,a}N_{b,d}/(g+a)^2 = 0
      int g = rs_.negation(a1);
      int d = rs_.negation(b1);
      Rational rest(0);
      int bg = rs_.sum_index(b, g);
      int ad = rs_.sum_index(a, d);
      if (bg >= 0 && ad >= 0) rest += Rational(value(b, g)) * Rational(value(a, d)) / rs_.norm2(bg);
      int ga = rs_.sum_index(g, a);
      int bd = rs_.sum_index(b, d);
      if (ga >= 0 && bd >= 0) rest += Rational(value(g, a)) * Rational(value(b, d)) / rs_.norm2(ga);
      int ngd = value(g, d);
      Rational r = -rs_.norm2(xi) * rest / Rational(ngd);
      if (!r.is_integer()) throw Error(ErrorKind::InvariantViolation, "non-integral Chevalley constant");
      result = static_cast<int>(r.num());
    }
    slot = result;
    return result;
  }

  const RootSystem& rs_;
  int n_;
  int np_;
  std::vector<int> memo_;
  std::vector<std::pair<int, int>> extra_of_;
};

}  // namespace

StructureConstants::StructureConstants(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
  const int n = rs_->size();
  chev_.assign(static_cast<std::size_t>(n) * n, 0);
  weyl_.assign(static_cast<std::size_t>(n) * n, ExtScalar());
  ChevalleySolver solver(*rs_);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = rs_->sum_index(a, b);
      if (s < 0) continue;
      int v = solver.value(a, b);
      chev_[at(a, b)] = v;
      // X_r = sqrt((r,r)/2) e_r, hence n_{a,b} = N_{a,b} sqrt((a,a)(b,b) / (2 (a+b,a+b))).
      weyl_[at(a, b)] =
          ExtScalar(Rational(v)) * ExtScalar::sqrt_of(rs_->norm2(a) * rs_->norm2(b) / (Rational(2) * rs_->norm2(s)));
    }
  for (const auto& pr : solver.extraspecial())
    if (pr.first >= 0) extraspecial_.push_back(pr);
}

StructureConstants StructureConstants::with_flipped_entry(int a, int b) const {
  StructureConstants copy(*this);
  copy.weyl_[at(a, b)] = -copy.weyl_[at(a, b)];
  copy.chev_[at(a, b)] = -copy.chev_[at(a, b)];
  return copy;
}

StructureConstants compute_structure_constants(std::shared_ptr<const RootSystem> rs) {
  return StructureConstants(std::move(rs));
}

ExtScalar bracket_coefficient(const StructureConstants& sc, const Root& a, const Root& b) {
  const RootSystem& rs = sc.root_system();
  auto ia = rs.index_of(a);
  auto ib = rs.index_of(b);
  if (!ia || !ib) throw Error(ErrorKind::NotARoot, "bracket arguments must be roots");
  if ((a + b).is_zero()) throw Error(ErrorKind::CartanBracket, "[X_a, X_-a] lies in the Cartan subalgebra");
  return sc.weyl(*ia, *ib);
}

namespace {

// Element of g: Cartan part as a combination of roots (via Riesz), plus root-vector coefficients.
struct AlgebraElement {
  std::vector<ExtScalar> cartan;       // coefficients over simple roots of the Riesz vector
  std::map<int, ExtScalar> root_part;  // root index -> coefficient

  bool is_zero() const {
    for (const auto& c : cartan)
      if (!c.is_zero()) return false;
    for (const auto& [k, v] : root_part)
      if (!v.is_zero()) return false;
    return true;
  }
};

// [X_a, [X_b, X_c]] accumulated into out.
void add_nested(const StructureConstants& sc, int a, int b, int c, AlgebraElement& out) {
  const RootSystem& rs = sc.root_system();
  const Root& rb = rs.root(b);
  const Root& rc = rs.root(c);
  if ((rb + rc).is_zero()) {
    // [X_b, X_{-b}] = t_b ; [X_a, t_b] = -(b, a) X_a
    ExtScalar coeff(-rs.inner_product(b, a));
    out.root_part[a] = out.root_part[a] + coeff;
    return;
  }
  int d = rs.sum_index(b, c);
  if (d < 0) return;
  const ExtScalar& inner = sc.weyl(b, c);
  if ((rs.root(a) + rs.root(d)).is_zero()) {
    const Root& ra = rs.root(a);
    for (int i = 0; i < rs.rank(); ++i) out.cartan[i] = out.cartan[i] + inner * ExtScalar(Rational(ra[i]));
    return;
  }
  int e = rs.sum_index(a, d);
  if (e < 0) return;
  out.root_part[e] = out.root_part[e] + inner * sc.weyl(a, d);
}

bool relevant(const RootSystem& rs, int a, int b) {
  return rs.sum_index(a, b) >= 0 || (rs.root(a) + rs.root(b)).is_zero();
}

}  // namespace

JacobiResult verify_jacobi(const StructureConstants& sc) {
  const RootSystem& rs = sc.root_system();
  const int n = rs.size();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        if (!relevant(rs, a, b) && !relevant(rs, b, c) && !relevant(rs, a, c)) continue;
        AlgebraElement sum{std::vector<ExtScalar>(rs.rank()), {}};
        add_nested(sc, a, b, c, sum);
        add_nested(sc, b, c, a, sum);
        add_nested(sc, c, a, b, sum);
        if (!sum.is_zero()) {
          JacobiResult r;
          r.holds = false;
          r.counterexample = std::array<int, 3>{a, b, c};
          r.detail = "Jacobi fails on " + rs.root(a).str() + ", " + rs.root(b).str() + ", " + rs.root(c).str();
          return r;
        }
      }
  return {};
}

TableCheck check_table_invariants(const StructureConstants& sc) {
  const RootSystem& rs = sc.root_system();
  const int n = rs.size();
  auto fail = [&](const std::string& what, int a, int b) {
    return TableCheck{false, what + " at (" + rs.root(a).str() + ", " + rs.root(b).str() + ")"};
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = rs.sum_index(a, b);
      if (s < 0) {
        if (!sc.weyl(a, b).is_zero()) return fail("nonzero constant off the table domain", a, b);
        continue;
      }
      const ExtScalar& v = sc.weyl(a, b);
      if (v.is_zero()) return fail("zero constant on the table domain", a, b);
      if (!(v == -sc.weyl(b, a))) return fail("antisymmetry", a, b);
      if (!(v == -sc.weyl(rs.negation(a), rs.negation(b)))) return fail("n_{-a,-b} = -n_{a,b}", a, b);
      int c = rs.negation(s);
      if (!(v == sc.weyl(b, c)) || !(v == sc.weyl(c, a))) return fail("cyclic identity", a, b);
      if (!(v == -sc.weyl(c, b))) return fail("n_{a,b} = -n_{c,b}", a, b);
      auto [p, q] = rs.root_string(rs.root(a), rs.root(b));
      (void)q;
      Rational expected = Rational((p + 1) * (p + 1)) * rs.norm2(a) * rs.norm2(b) / (Rational(2) * rs.norm2(s));
      if (!(v.squared() == ExtScalar(expected))) return fail("magnitude (p+1) with length factor", a, b);
    }
  return {};
}

}  // namespace flagclass
