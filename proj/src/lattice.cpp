#include "mqg/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mqg {

bool LatticeVec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool LatticeVec::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

int LatticeVec::height() const {
  int h = 0;
  for (int x : c_) h += x;
  return h;
}

LatticeVec LatticeVec::operator+(const LatticeVec& o) const {
  if (o.rank() != rank()) throw Error("lattice dimension mismatch");
  LatticeVec r = *this;
  for (int i = 0; i < rank(); ++i) r.c_[i] += o.c_[i];
  return r;
}

LatticeVec LatticeVec::operator-(const LatticeVec& o) const { return *this + (-o); }

LatticeVec LatticeVec::operator-() const {
  LatticeVec r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LatticeVec LatticeVec::operator*(int k) const {
  LatticeVec r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::string LatticeVec::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

namespace {

// Leading principal minors of an integer matrix (fraction-free elimination).
bool positive_definite(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}

}  // namespace

CartanDatum::CartanDatum(std::vector<std::vector<int>> a, std::vector<int> d, std::string name)
    : a_(std::move(a)), d_(std::move(d)), name_(std::move(name)) {
  const int n = rank();
  if (n == 0) throw Error("empty Cartan matrix");
  if (static_cast<int>(d_.size()) != n) throw Error("symmetrizer length mismatch");
  std::vector<std::vector<long long>> sym(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a_[i].size()) != n) throw Error("Cartan matrix is not square");
    if (d_[i] <= 0) throw Error("symmetrizers must be positive");
    for (int j = 0; j < n; ++j) {
      if (i == j && a_[i][j] != 2) throw Error("Cartan matrix diagonal must be 2");
      if (i != j && a_[i][j] > 0) throw Error("Cartan matrix off-diagonal must be <= 0");
      if (i != j && (a_[i][j] == 0) != (a_[j][i] == 0))
        throw Error("Cartan matrix zero pattern is not symmetric");
      if (d_[i] * a_[i][j] != d_[j] * a_[j][i]) throw Error("d does not symmetrize A");
      sym[i][j] = static_cast<long long>(d_[i]) * a_[i][j];
    }
  }
  if (!positive_definite(sym)) throw Error("Cartan matrix is not of finite type");
}

CartanDatum CartanDatum::from_type(const std::string& type) {
  if (type.size() < 2) throw Error("unknown Cartan type '" + type + "'");
  char series = type[0];
  int n = 0;
  try {
    n = std::stoi(type.substr(1));
  } catch (...) {
    throw Error("unknown Cartan type '" + type + "'");
  }
  if (n < 1 || n > 4) throw Error("unsupported rank in Cartan type '" + type + "' (1..4)");
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  std::vector<int> d(n, 1);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&] {
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  switch (series) {
    case 'A':
      chain();
      break;
    case 'B':  // α_n short
      if (n < 2) throw Error("B series needs rank >= 2");
      chain();
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':  // α_n long
      if (n < 2) throw Error("C series needs rank >= 2");
      chain();
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      d[n - 1] = 2;
      break;
    case 'D':
      if (n != 4) throw Error("only D4 is supported");
      a[0][1] = a[1][0] = a[1][2] = a[2][1] = a[1][3] = a[3][1] = -1;
      break;
    case 'F':
      if (n != 4) throw Error("F series needs rank 4");
      chain();
      a[1][2] = -1;
      a[2][1] = -2;
      d = {2, 2, 1, 1};
      break;
    case 'G':
      if (n != 2) throw Error("G series needs rank 2");
      a[0][1] = -3;
      a[1][0] = -1;
      d = {1, 3};
      break;
    default:
      throw Error("unknown Cartan type '" + type + "'");
  }
  return CartanDatum(std::move(a), std::move(d), type);
}

Frame Frame::identity(int rank) {
  std::vector<LatticeVec> im;
  for (int i = 0; i < rank; ++i) im.push_back(LatticeVec::unit(rank, i));
  return Frame(std::move(im));
}

LatticeVec Frame::combine(const LatticeVec& coeffs) const {
  LatticeVec r(rank());
  for (int i = 0; i < rank(); ++i)
    if (coeffs[i]) r += images_[i] * coeffs[i];
  return r;
}

std::string Frame::str() const {
  std::string s = "{";
  for (int i = 0; i < rank(); ++i) s += (i ? "," : "") + images_[i].str();
  return s + "}";
}

Bicharacter::Bicharacter(RingPtr ring, std::vector<std::vector<Exponent>> sqrt_log)
    : ring_(std::move(ring)), log_(std::move(sqrt_log)) {
  for (const auto& row : log_)
    if (row.size() != log_.size()) throw Error("bicharacter matrix is not square");
}

Exponent Bicharacter::sqrt_log(const LatticeVec& l, const LatticeVec& m) const {
  if (l.rank() != rank() || m.rank() != rank()) throw Error("lattice dimension mismatch");
  Exponent e;
  for (int a = 0; a < rank(); ++a) {
    if (!l[a]) continue;
    for (int b = 0; b < rank(); ++b) {
      int k = l[a] * m[b];
      if (!k) continue;
      for (int v = 0; v < kMaxVars; ++v) e[v] += k * log_[a][b][v];
    }
  }
  return e;
}

Coeff Bicharacter::sqrt_eval(const LatticeVec& l, const LatticeVec& m) const {
  return Coeff(ring_, Poly::monomial(sqrt_log(l, m)));
}

Coeff Bicharacter::eval(const LatticeVec& l, const LatticeVec& m) const {
  Exponent e = sqrt_log(l, m);
  return Coeff(ring_, Poly::monomial(e + e));
}

Bicharacter Bicharacter::opposite() const {
  auto t = log_;
  for (int a = 0; a < rank(); ++a)
    for (int b = 0; b < rank(); ++b) t[a][b] = log_[b][a];
  return Bicharacter(ring_, std::move(t));
}

namespace {

RingPtr admissible_ring(const CartanDatum& datum, std::vector<int>& root_d) {
  const int n = datum.rank();
  std::vector<std::string> params{"qd"};
  std::vector<DisplayAlias> aliases{{"q", 0, 4}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      params.push_back("p" + std::to_string(i + 1) + std::to_string(j + 1));
      std::string alias = n == 2 ? "a" : "a" + std::to_string(i + 1) + std::to_string(j + 1);
      aliases.push_back({alias, static_cast<int>(params.size()) - 1, 2});
    }
  if (static_cast<int>(params.size()) > kMaxVars) throw Error("rank too large for parameter set");
  std::set<int> ds;
  for (int i = 0; i < n; ++i) ds.insert(datum.d(i));
  std::vector<SqrtDef> roots;
  for (int d : ds) {
    roots.push_back({"th" + std::to_string(d), Poly::variable(0, 4 * d) - Poly(1)});
    root_d.push_back(d);
  }
  return ParamRing::create(std::move(params), std::move(roots), std::move(aliases));
}

Bicharacter admissible_chi(const CartanDatum& datum, const RingPtr& ring) {
  const int n = datum.rank();
  std::vector<std::vector<Exponent>> log(n, std::vector<Exponent>(n));
  int p = 1;
  for (int i = 0; i < n; ++i) log[i][i][0] = 2 * datum.d(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      log[i][j][p] = 1;
      // q̇_ij q̇_ji = q̇^{2 d_i a_ij}
      log[j][i][0] = 2 * datum.d(i) * datum.a(i, j);
      log[j][i][p] = -1;
    }
  return Bicharacter(ring, std::move(log));
}

}  // namespace

AdmissibleData::AdmissibleData(const CartanDatum& datum)
    : datum_(datum), ring_(admissible_ring(datum_, root_d_)), chi_(admissible_chi(datum_, ring_)) {}


Coeff AdmissibleData::theta_for_d(int d) const {
  for (size_t k = 0; k < root_d_.size(); ++k)
    if (root_d_[k] == d) return Coeff::root(ring_, static_cast<int>(k));
  throw Error("no root symbol for q^" + std::to_string(d) + " - 1");
}

Coeff AdmissibleData::theta_for_self_value(const LatticeVec& lambda) const {
  Exponent e = chi_.sqrt_log(lambda, lambda);
  // χ(λ,λ) = qd^{2 e0} must be a pure power qd^{4d}
  for (int v = 1; v < kMaxVars; ++v)
    if (e[v] != 0) throw Error("self-pairing is not a power of qd");
  if (e[0] <= 0 || e[0] % 2 != 0) throw Error("self-pairing has no root symbol");
  return theta_for_d(e[0] / 2);
}

Coeff frame_q(const Bicharacter& chi, const Frame& pi, int i, int j) { return chi.eval(pi(i), pi(j)); }

Coeff frame_qdot(const Bicharacter& chi, const Frame& pi, int i, int j) {
  return chi.sqrt_eval(pi(i), pi(j));
}

int root_string_length(const Bicharacter& chi, const Frame& pi, int i, int j, int limit) {
  Coeff qii = frame_q(chi, pi, i, i);
  Coeff cross = frame_q(chi, pi, i, j) * frame_q(chi, pi, j, i);
  int t = 0;
  while (t < limit) {
    Coeff next = q_factorial(t + 1, qii) * shifted_factorial(t + 1, qii, cross);
    if (next.is_zero()) return t;
    ++t;
  }
  throw Error("root string does not terminate (not finite type)");
}

int n_ij(const CartanDatum& datum, const Bicharacter& chi, const Frame& pi, int i, int j) {
  if (i == j) throw Error("n_ij requires i != j (N_ii = -2 by convention)");
  int n = -datum.a(i, j);
  if (root_string_length(chi, pi, i, j) != n)
    throw Error("bicharacter is not admissible: root string length disagrees with -a_ij");
  return n;
}

Frame tau_reflect(const CartanDatum& datum, const Bicharacter& chi, const Frame& pi, int i) {
  std::vector<LatticeVec> im;
  for (int j = 0; j < pi.rank(); ++j) {
    if (j == i)
      im.push_back(-pi(i));
    else
      im.push_back(pi(j) + pi(i) * n_ij(datum, chi, pi, i, j));
  }
  return Frame(std::move(im));
}

int m_ij(const CartanDatum& datum, int i, int j) {
  if (i == j) throw Error("m_ij requires i != j");
  switch (datum.a(i, j) * datum.a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw Error("a_ij a_ji >= 4: infinite order");
  }
}

}  // namespace mqg
