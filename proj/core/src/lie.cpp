#include "confembed/lie.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

#include "confembed/error.hpp"

namespace confembed {

// ---------------------------------------------------------------------------
// LieType

void LieType::check() const {
  const std::string name = std::string(1, static_cast<char>(family)) + std::to_string(rank);
  auto bound = [&](const std::string& rule) {
    fail(ErrorKind::Construction, "invalid Lie type " + name + ": " + rule);
  };
  switch (family) {
    case Family::A: if (rank < 1) bound("A requires rank >= 1"); break;
    case Family::B: if (rank < 2) bound("B requires rank >= 2"); break;
    case Family::C: if (rank < 2) bound("C requires rank >= 2"); break;
    case Family::D: if (rank < 4) bound("D requires rank >= 4"); break;
    case Family::E: if (rank < 6 || rank > 8) bound("E requires rank in {6,7,8}"); break;
    case Family::F: if (rank != 4) bound("F requires rank 4"); break;
    case Family::G: if (rank != 2) bound("G requires rank 2"); break;
    default: fail(ErrorKind::Construction, "unknown Lie family");
  }
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) fail(ErrorKind::Parse, "cannot parse Lie type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') {
    fail(ErrorKind::Parse, "unknown Lie family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 1000) {
      fail(ErrorKind::Parse, "cannot parse rank in '" + std::string(text) + "'");
    }
    rank = rank * 10 + (text[i] - '0');
  }
  LieType t{static_cast<Family>(letter), rank};
  t.check();
  return t;
}

std::string LieType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(std::shared_ptr<const RootSystem> system, std::vector<Rational> coords)
    : system_(std::move(system)), coords_(std::move(coords)) {
  if (!system_) fail(ErrorKind::Usage, "weight without a root system");
  if (static_cast<int>(coords_.size()) != system_->rank()) {
    fail(ErrorKind::Usage, "weight has " + std::to_string(coords_.size()) +
                               " coordinates, " + system_->type().to_string() + " needs " +
                               std::to_string(system_->rank()));
  }
}

Weight::Weight(std::shared_ptr<const RootSystem> system, const IntVec& coords)
    : Weight(std::move(system), std::vector<Rational>(coords.begin(), coords.end())) {}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
}

bool Weight::is_dominant_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return is_nonnegative_integer(c); });
}

IntVec Weight::to_ints() const {
  IntVec out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!is_integer(c)) fail(ErrorKind::Usage, "weight " + to_string() + " is not integral");
    out.push_back(to_int64(c));
  }
  return out;
}

void Weight::require_same_system(const Weight& other) const {
  if (system_->type() != other.system_->type()) {
    fail(ErrorKind::Usage, "weights belong to different root systems (" +
                               system_->type().to_string() + " vs " +
                               other.system_->type().to_string() + ")");
  }
}

Weight Weight::operator+(const Weight& other) const {
  require_same_system(other);
  std::vector<Rational> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Weight(system_, std::move(c));
}

Weight Weight::operator-(const Weight& other) const {
  require_same_system(other);
  std::vector<Rational> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return Weight(system_, std::move(c));
}

Weight Weight::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return Weight(system_, std::move(c));
}

Weight Weight::operator*(const Rational& scalar) const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x *= scalar;
  return Weight(system_, std::move(c));
}

bool Weight::operator==(const Weight& other) const {
  return system_->type() == other.system_->type() && coords_ == other.coords_;
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += confembed::to_string(coords_[i]);
  }
  return s + "]";
}

std::string Weight::label() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) s += confembed::to_string(mag);
    s += "ω" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Root system construction

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

std::vector<IntVec> cartan_matrix(const LieType& t) {
  const int n = t.rank;
  std::vector<IntVec> c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based, simply laced
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // a_n short
      c[n - 1][n - 2] = -1;
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -1;  // a_n long
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      c[1][2] = -2;  // a_1, a_2 long; a_3, a_4 short
      c[2][1] = -1;
      link(3, 4);
      break;
    case Family::G:
      c[0][1] = -1;  // a_1 short, a_2 long
      c[1][0] = -3;
      break;
  }
  return c;
}

// d_i with C_ij d_j = C_ji d_i, d_0 = 1, propagated along the (connected) diagram.
std::vector<Rational> symmetrize(const std::vector<IntVec>& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * make_rational(c[j][i], c[i][j]);
      todo.push(j);
    }
  }
  return d;
}

RatMatrix invert(const std::vector<IntVec>& m) {
  const std::size_t n = m.size();
  RatMatrix a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::Construction, "singular Cartan matrix");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  RatMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

IntVec fundamental_of(const std::vector<IntVec>& cartan, const IntVec& root_coords) {
  const std::size_t n = cartan.size();
  IntVec c(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (root_coords[j] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) c[k] += root_coords[j] * cartan[j][k];
  }
  return c;
}

// Positive roots by closure over root strings: beta + a_i is a root iff
// p - <beta, a_i^vee> > 0, where p is the length of the downward a_i-string.
std::vector<IntVec> positive_root_closure(const std::vector<IntVec>& cartan) {
  const std::size_t n = cartan.size();
  std::set<IntVec> roots;
  std::vector<IntVec> all;
  std::vector<IntVec> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    roots.insert(e);
    level.push_back(e);
  }
  while (!level.empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : level) {
      all.push_back(beta);
      const IntVec f = fundamental_of(cartan, beta);
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = 0;
        IntVec down = beta;
        while (true) {
          --down[i];
          if (down[i] < 0 || !roots.contains(down)) break;
          ++p;
        }
        if (p - f[i] <= 0) continue;
        IntVec up = beta;
        ++up[i];
        if (roots.insert(up).second) next.push_back(up);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

std::int64_t lcm_of_denominators(const RatMatrix& m) {
  BigInt l = 1;
  for (const auto& row : m)
    for (const auto& x : row) l = boost::multiprecision::lcm(l, denominator_of(x));
  return static_cast<std::int64_t>(l);
}

}  // namespace

std::shared_ptr<const RootSystem> build_root_system(LieType t) {
  t.check();
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->type_ = t;
  rs->cartan_ = cartan_matrix(t);
  rs->cartan_inverse_ = invert(rs->cartan_);
  std::vector<Rational> d = symmetrize(rs->cartan_);

  const std::size_t n = static_cast<std::size_t>(t.rank);
  auto gram_from = [&](const std::vector<Rational>& sym) {
    RatMatrix g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i][j] = rs->cartan_inverse_[i][j] * sym[j];
    return g;
  };
  RatMatrix g = gram_from(d);

  rs->positive_root_levels_ = positive_root_closure(rs->cartan_);
  for (const auto& lv : rs->positive_root_levels_) {
    rs->positive_roots_.push_back(fundamental_of(rs->cartan_, lv));
  }

  // Rescale so that (theta, theta) = 2.
  const IntVec& theta = rs->positive_roots_.back();
  Rational tt = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tt += theta[i] * g[i][j] * theta[j];
  const Rational scale = Rational(2) / tt;
  for (auto& x : d) x *= scale;
  rs->symmetrizers_ = d;
  rs->gram_ = gram_from(d);

  rs->gram_scale_ = lcm_of_denominators(rs->gram_);
  rs->scaled_gram_.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs->scaled_gram_[i][j] = to_int64(rs->gram_[i][j] * rs->gram_scale_);

  // h^vee = 1 + (theta, rho) once (theta, theta) = 2.
  const IntVec ones(n, 1);
  const Rational theta_rho = make_rational(rs->scaled_inner(theta, ones), rs->gram_scale_);
  if (!is_integer(theta_rho)) fail(ErrorKind::Construction, "non-integral (theta, rho)");
  rs->dual_coxeter_ = static_cast<int>(to_int64(theta_rho)) + 1;
  rs->dimension_ = n + 2 * rs->positive_roots_.size();
  return rs;
}

std::shared_ptr<const RootSystem> root_system(LieType t) {
  static std::mutex mu;
  static std::map<LieType, std::shared_ptr<const RootSystem>> cache;
  t.check();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  auto rs = build_root_system(t);
  cache.emplace(t, rs);
  return rs;
}

std::int64_t RootSystem::scaled_inner(const IntVec& a, const IntVec& b) const {
  std::int64_t s = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += scaled_gram_[i][j] * b[j];
    s += a[i] * row;
  }
  return s;
}

std::vector<Weight> RootSystem::positive_roots() const {
  std::vector<Weight> out;
  out.reserve(positive_roots_.size());
  for (const auto& r : positive_roots_) out.emplace_back(shared_from_this(), r);
  return out;
}

Weight RootSystem::theta() const { return Weight(shared_from_this(), positive_roots_.back()); }

Weight RootSystem::rho() const { return Weight(shared_from_this(), IntVec(rank(), 1)); }

Weight RootSystem::zero() const { return Weight(shared_from_this(), IntVec(rank(), 0)); }

Weight RootSystem::fundamental(int i) const {
  if (i < 1 || i > rank()) {
    fail(ErrorKind::Usage, "fundamental weight index " + std::to_string(i) + " out of range for " +
                               type_.to_string());
  }
  IntVec c(rank(), 0);
  c[i - 1] = 1;
  return Weight(shared_from_this(), c);
}

Weight RootSystem::weight(const IntVec& coords) const { return Weight(shared_from_this(), coords); }

Weight RootSystem::weight(std::vector<Rational> coords) const {
  return Weight(shared_from_this(), std::move(coords));
}

IntVec RootSystem::to_root_coords(const IntVec& f) const {
  // weight = sum_j r_j a_j = sum_j r_j C_jk w_k, so f = C^T r and r = C^{-T} f.
  const std::size_t n = f.size();
  IntVec r(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k) s += cartan_inverse_[k][j] * f[k];
    if (!is_integer(s)) fail(ErrorKind::Usage, "weight is not in the root lattice");
    r[j] = to_int64(s);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Operations

Rational inner_product(const Weight& a, const Weight& b) {
  if (a.system().type() != b.system().type()) {
    fail(ErrorKind::Usage, "inner product of weights from different root systems");
  }
  const auto& g = a.system().gram();
  Rational s = 0;
  for (int i = 0; i < a.rank(); ++i) {
    if (a.coords()[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < a.rank(); ++j) row += g[i][j] * b.coords()[j];
    s += a.coords()[i] * row;
  }
  return s;
}

namespace {

void require_dominant(const Weight& w, const char* op) {
  if (!w.is_dominant_integral()) {
    fail(ErrorKind::Usage, std::string(op) + " requires a dominant integral weight, got " + w.to_string());
  }
}

}  // namespace

Rational casimir(const Weight& lambda) {
  require_dominant(lambda, "casimir");
  const Weight rho = lambda.system().rho();
  return inner_product(lambda, lambda + rho * 2);
}

BigInt weyl_dim(const Weight& lambda) {
  require_dominant(lambda, "weyl_dim");
  const RootSystem& rs = lambda.system();
  IntVec shifted = lambda.to_ints();
  for (auto& c : shifted) c += 1;
  const IntVec rho(rs.rank(), 1);
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& alpha : rs.positive_root_coords()) {
    num *= rs.scaled_inner(shifted, alpha);
    den *= rs.scaled_inner(rho, alpha);
  }
  if (num % den != 0) fail(ErrorKind::Construction, "Weyl dimension is not an integer");
  return num / den;
}

int reflect_to_dominant(const RootSystem& system, IntVec& v) {
  const std::size_t n = v.size();
  int sign = 1;
  while (true) {
    std::size_t i = 0;
    while (i < n && v[i] >= 0) ++i;
    if (i == n) return sign;
    const std::int64_t c = v[i];
    const IntVec& alpha = system.simple_root(static_cast<int>(i));
    for (std::size_t k = 0; k < n; ++k) v[k] -= c * alpha[k];
    sign = -sign;
  }
}

DominantShift to_dominant_shifted(const Weight& lambda) {
  IntVec v = lambda.to_ints();
  int sign = reflect_to_dominant(lambda.system(), v);
  if (std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; })) sign = 0;
  return {Weight(lambda.system_ptr(), v), sign};
}

std::vector<IntVec> weyl_orbit(const RootSystem& system, const IntVec& dominant) {
  std::unordered_set<IntVec, IntVecHash> seen{dominant};
  std::vector<IntVec> out{dominant};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const IntVec w = out[head];
    for (int i = 0; i < system.rank(); ++i) {
      if (w[i] <= 0) continue;
      IntVec r = w;
      const IntVec& alpha = system.simple_root(i);
      for (std::size_t k = 0; k < r.size(); ++k) r[k] -= w[i] * alpha[k];
      if (seen.insert(r).second) out.push_back(std::move(r));
    }
  }
  return out;
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace confembed
