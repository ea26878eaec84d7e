#include "flagclass/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "flagclass/error.hpp"

namespace flagclass {

// ---------------------------------------------------------------- LieType

namespace {

bool rank_ok(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 3;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

constexpr Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G};

}  // namespace

LieType LieType::make(Family family, int rank) {
  if (!rank_ok(family, rank))
    throw Error(ErrorKind::InvalidLieType,
                std::string("rank ") + std::to_string(rank) + " out of bounds for type " + static_cast<char>(family));
  return LieType{family, rank};
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorKind::InvalidLieType, "cannot parse Lie type '" + std::string(text) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto it = std::find_if(std::begin(kFamilies), std::end(kFamilies),
                         [&](Family f) { return static_cast<char>(f) == letter; });
  if (it == std::end(kFamilies)) throw Error(ErrorKind::InvalidLieType, "unknown family in '" + std::string(text) + "'");
  int rank = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000)
      throw Error(ErrorKind::InvalidLieType, "bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (ch - '0');
  }
  return make(*it, rank);
}

std::string LieType::str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

std::vector<LieType> all_types_up_to(int max_rank) {
  std::vector<LieType> out;
  for (Family f : kFamilies)
    for (int n = 1; n <= max_rank; ++n)
      if (rank_ok(f, n)) out.push_back(LieType{f, n});
  return out;
}

std::int64_t closed_form_root_count(LieType t) {
  const std::int64_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

// ---------------------------------------------------------------- Root

int Root::height() const {
  int h = 0;
  for (int x : coords_) h += x;
  return h;
}

bool Root::is_positive() const {
  return std::any_of(coords_.begin(), coords_.end(), [](int x) { return x > 0; });
}

bool Root::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; });
}

Root Root::operator-() const {
  Coords c(coords_);
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b) {
  if (a.coords_.size() != b.coords_.size()) throw Error(ErrorKind::DimensionMismatch, "root rank mismatch");
  Coords c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return Root(std::move(c));
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

Root operator*(int k, const Root& a) {
  Coords c(a.coords_);
  for (int& x : c) x *= k;
  return Root(std::move(c));
}

std::string Root::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- gram

std::vector<std::vector<Rational>> bourbaki_gram(LieType t) {
  const int n = t.rank;
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
  auto link = [&](int i, int j, Rational v) {  // 1-based
    g[i - 1][j - 1] = v;
    g[j - 1][i - 1] = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 2;
      g[n - 1][n - 1] = 1;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 1;
      g[n - 1][n - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 1, n, -1);
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case Family::E:
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = 2;
      g[1][1] = 2;
      g[2][2] = 1;
      g[3][3] = 1;
      link(1, 2, -1);
      link(2, 3, -1);
      link(3, 4, Rational(-1, 2));
      break;
    case Family::G:
      g[0][0] = Rational(2, 3);
      g[1][1] = 2;
      link(1, 2, -1);
      break;
  }
  return g;
}

// ---------------------------------------------------------------- RootSystem

namespace {

bool canonical_less(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.coords() > b.coords();
}

}  // namespace

RootSystem::RootSystem(LieType type) : type_(LieType::make(type.family, type.rank)), gram_(bourbaki_gram(type_)) {
  const int n = type_.rank;
  std::vector<Root> simple;
  for (int i = 0; i < n; ++i) {
    Coords c(n, 0);
    c[i] = 1;
    simple.emplace_back(std::move(c));
  }

  // Breadth-first closure by height over simple-root strings.
  std::vector<Root> positive(simple);
  std::unordered_map<Coords, int, CoordsHash> known;
  for (std::size_t i = 0; i < positive.size(); ++i) known.emplace(positive[i].coords(), static_cast<int>(i));
  std::vector<Root> layer(simple);
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const Root& b : layer) {
      for (int i = 0; i < n; ++i) {
        Root up = b + simple[i];
        if (known.count(up.coords())) continue;
        if (b == simple[i]) continue;  // 2 alpha_i is never a root
        int p = 0;
        for (Root down = b - simple[i]; known.count(down.coords()); down = down - simple[i]) ++p;
        // <b, alpha_i^vee>
        Rational ip(0);
        for (int k = 0; k < n; ++k) ip += Rational(b[k]) * gram_[k][i];
        Rational cart = Rational(2) * ip / gram_[i][i];
        if (!cart.is_integer()) throw Error(ErrorKind::InvariantViolation, "non-integral Cartan number");
        int q = p - static_cast<int>(cart.num());
        if (q > 0) {
          known.emplace(up.coords(), -1);
          next.push_back(up);
        }
      }
    }
    positive.insert(positive.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(positive.begin(), positive.end(), canonical_less);

  roots_ = positive;
  for (const Root& r : positive) roots_.push_back(-r);
  for (int i = 0; i < size(); ++i) index_.emplace(roots_[i].coords(), i);
  norms_.reserve(size());
  for (const Root& r : roots_) norms_.push_back(inner_product(r, r));

  sum_table_.assign(static_cast<std::size_t>(size()) * size(), -1);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      auto k = index_of(roots_[i] + roots_[j]);
      if (k) sum_table_[static_cast<std::size_t>(i) * size() + j] = *k;
    }
}

const Root& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw Error(ErrorKind::IndexOutOfRange, "simple root index " + std::to_string(i) + " out of range");
  return roots_[i - 1];  // canonical order lists alpha_1..alpha_n first
}

std::optional<int> RootSystem::index_of(const Coords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::inner_product(const Root& a, const Root& b) const {
  if (a.rank() != rank() || b.rank() != rank())
    throw Error(ErrorKind::DimensionMismatch, "inner product of vectors of length " + std::to_string(a.rank()) + " and " +
                                                  std::to_string(b.rank()) + " in rank " + std::to_string(rank()));
  Rational s(0);
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    Rational row(0);
    for (int j = 0; j < rank(); ++j)
      if (b[j] != 0) row += gram_[i][j] * Rational(b[j]);
    s += Rational(a[i]) * row;
  }
  return s;
}

const Root& RootSystem::checked(const Root& r, const char* what) const {
  auto idx = index_of(r);
  if (!idx) throw Error(ErrorKind::NotARoot, std::string(what) + " " + r.str() + " is not a root of " + type_.str());
  return roots_[*idx];
}

int RootSystem::cartan_integer(const Root& b, const Root& a) const {
  Rational c = Rational(2) * inner_product(b, a) / inner_product(a, a);
  if (!c.is_integer()) throw Error(ErrorKind::InvariantViolation, "non-integral Cartan number");
  return static_cast<int>(c.num());
}

std::pair<int, int> RootSystem::root_string(const Root& a, const Root& b) const {
  checked(a, "string direction");
  checked(b, "string base");
  if (a == b || a == -b) throw Error(ErrorKind::DegenerateRootString, "root string requires b != +/-a");
  int p = 0;
  while (contains(b - (p + 1) * a)) ++p;
  int q = 0;
  while (contains(b + (q + 1) * a)) ++q;
  return {p, q};
}

Root RootSystem::reflect(const Root& a, const Root& b) const {
  return b - cartan_integer(b, a) * a;
}

Root RootSystem::simple_reflection(int i, const Root& b) const {
  if (i < 1 || i > rank()) throw Error(ErrorKind::IndexOutOfRange, "simple reflection index " + std::to_string(i) + " out of range");
  checked(b, "reflected vector");
  return reflect(simple_root(i), b);
}

RootSystem build_root_system(LieType type) { return RootSystem(type); }

std::vector<std::vector<int>> dynkin_neighbors(const RootSystem& rs) {
  std::vector<std::vector<int>> adj(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (i != j && !rs.gram()[i][j].is_zero()) adj[i].push_back(j);
  return adj;
}

}  // namespace flagclass
