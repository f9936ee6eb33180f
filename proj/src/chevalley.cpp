#include "flagsym/chevalley.hpp"

#include <ostream>
#include <random>

namespace flagsym {

namespace {

int as_int(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw ConsistencyError(std::string("non-integral ") + what);
  return static_cast<int>(to_integer(q));
}

// Constants for positive pairs are filled height by height; mixed-sign and
// negative pairs are reduced to positive pairs through n(-a,-b) = -n(a,b) and
// n(a,b)/(c,c) = n(b,c)/(a,a) = n(c,a)/(b,b) for a + b + c = 0.
class Builder {
 public:
  explicit Builder(const RootSystem& rs)
      : rs_(rs), p_(rs.num_positive()), pos_(static_cast<std::size_t>(p_ * p_), 0) {}

  void run() {
    for (RootId xi = 0; xi < p_; ++xi) {
      if (rs_.root(xi).height() < 2) continue;
      RootId a = -1, b = -1;
      for (int node = 1; node <= rs_.rank(); ++node) {
        auto rest = rs_.sum(xi, rs_.negate(rs_.simple(node)));
        if (rest && rs_.is_positive(*rest)) {
          a = rs_.simple(node);
          b = *rest;
          break;
        }
      }
      if (a < 0) throw ConsistencyError("no extraspecial pair for " + rs_.root(xi).to_string());
      const int nab = rs_.root_string(a, b).p + 1;
      set_positive(a, b, nab);

      for (RootId alpha = 0; alpha < p_; ++alpha) {
        if (alpha == a || alpha == b) continue;
        auto beta = rs_.sum(xi, rs_.negate(alpha));
        if (!beta || !rs_.is_positive(*beta) || positive(alpha, *beta) != 0) continue;
        // Four-root relation for (alpha, beta, -a, -b), which sum to zero.
        const RootId na = rs_.negate(a);
        const RootId nb = rs_.negate(b);
        Rational acc(0);
        if (auto s = rs_.sum(*beta, na)) acc += Rational(n(*beta, na) * n(alpha, nb)) / rs_.length2(*s);
        if (auto s = rs_.sum(alpha, na)) acc += Rational(n(na, alpha) * n(*beta, nb)) / rs_.length2(*s);
        const int value = as_int(acc * rs_.length2(xi) / Rational(nab), "structure constant");
        if (std::abs(value) != rs_.root_string(alpha, *beta).p + 1) {
          throw ConsistencyError("structure constant magnitude mismatch at " + rs_.root(xi).to_string());
        }
        set_positive(alpha, *beta, value);
      }
    }
  }

  int n(RootId x, RootId y) const {
    auto z = rs_.sum(x, y);
    if (!z) return 0;
    const bool px = rs_.is_positive(x);
    const bool py = rs_.is_positive(y);
    if (px && py) {
      const int v = positive(x, y);
      if (v == 0) throw ConsistencyError("structure constant requested before it was computed");
      return v;
    }
    if (!px && !py) return -n(rs_.negate(x), rs_.negate(y));
    if (!px) return -n(y, x);
    if (rs_.is_positive(*z)) {
      return as_int(-rs_.length2(*z) / rs_.length2(x) * Rational(n(rs_.negate(y), *z)), "reduced constant");
    }
    return as_int(rs_.length2(*z) / rs_.length2(y) * Rational(n(rs_.negate(*z), x)), "reduced constant");
  }

 private:
  int positive(RootId x, RootId y) const { return pos_[static_cast<std::size_t>(x * p_ + y)]; }
  void set_positive(RootId x, RootId y, int v) {
    pos_[static_cast<std::size_t>(x * p_ + y)] = v;
    pos_[static_cast<std::size_t>(y * p_ + x)] = -v;
  }

  const RootSystem& rs_;
  int p_;
  std::vector<int> pos_;
};

// Jacobiator of three root vectors in the basis (H_1..H_n, E_roots).
class Jacobi {
 public:
  Jacobi(const ChevalleyTable& t, const RootSystem& rs)
      : t_(t), rs_(rs), n_(rs.rank()), acc_(static_cast<std::size_t>(n_ + rs.size()), 0) {
    coroot_.resize(static_cast<std::size_t>(rs.size()));
    pairing_.resize(static_cast<std::size_t>(rs.size()));
    for (RootId r = 0; r < rs.size(); ++r) {
      for (int i = 1; i <= n_; ++i) {
        const RootId s = rs.simple(i);
        coroot_[static_cast<std::size_t>(r)].push_back(
            as_int(Rational(rs.root(r)[i - 1]) * rs.length2(s) / rs.length2(r), "coroot coefficient"));
        pairing_[static_cast<std::size_t>(r)].push_back(rs.cartan_integer(r, s));
      }
    }
  }

  bool vanishes(RootId x, RootId y, RootId z) {
    term(x, y, z);
    term(y, z, x);
    term(z, x, y);
    bool zero = true;
    for (auto& v : acc_) {
      if (v != 0) zero = false;
      v = 0;
    }
    return zero;
  }

 private:
  // acc += [E_x, [E_y, E_z]]
  void term(RootId x, RootId y, RootId z) {
    if (y == rs_.negate(z)) {
      // [E_y, E_-y] = H_y and [E_x, H_y] = -<x, y^vee> E_x
      long long coeff = 0;
      const auto& h = coroot_[static_cast<std::size_t>(y)];
      const auto& xp = pairing_[static_cast<std::size_t>(x)];
      for (int i = 0; i < n_; ++i) coeff += static_cast<long long>(h[static_cast<std::size_t>(i)]) * xp[static_cast<std::size_t>(i)];
      acc_[static_cast<std::size_t>(n_ + x)] -= coeff;
      return;
    }
    auto w = rs_.sum(y, z);
    if (!w) return;
    const long long c = t_.n(y, z);
    if (x == rs_.negate(*w)) {
      const auto& h = coroot_[static_cast<std::size_t>(x)];
      for (int i = 0; i < n_; ++i) acc_[static_cast<std::size_t>(i)] += c * h[static_cast<std::size_t>(i)];
      return;
    }
    if (auto v = rs_.sum(x, *w)) acc_[static_cast<std::size_t>(n_ + *v)] += c * t_.n(x, *w);
  }

  const ChevalleyTable& t_;
  const RootSystem& rs_;
  int n_;
  std::vector<long long> acc_;
  std::vector<std::vector<int>> coroot_;
  std::vector<std::vector<int>> pairing_;
};

}  // namespace

ChevalleyTable::ChevalleyTable(const RootSystem& rs)
    : size_(rs.size()), table_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_), 0) {
  Builder builder(rs);
  builder.run();
  for (RootId a = 0; a < size_; ++a) {
    for (RootId b = 0; b < size_; ++b) {
      if (rs.sum_is_root(a, b)) table_[index(a, b)] = static_cast<std::int8_t>(builder.n(a, b));
    }
  }
  b_.reserve(static_cast<std::size_t>(size_));
  for (RootId d = 0; d < size_; ++d) b_.push_back(Rational(2) / rs.length2(d));
}

ChevalleyTable build_constants(const RootSystem& rs) {
  ChevalleyTable t(rs);
#ifndef NDEBUG
  if (rs.rank() <= 6) {
    if (auto f = find_jacobi_failure(t, rs)) {
      throw ConsistencyError("Jacobi identity fails for " + rs.type().label());
    }
  }
#endif
  return t;
}

std::optional<JacobiFailure> find_jacobi_failure(const ChevalleyTable& t, const RootSystem& rs) {
  Jacobi jac(t, rs);
  for (RootId x = 0; x < rs.size(); ++x) {
    for (RootId y = 0; y < rs.size(); ++y) {
      for (RootId z = 0; z < rs.size(); ++z) {
        if (!jac.vanishes(x, y, z)) return JacobiFailure{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<JacobiFailure> find_jacobi_failure_sampled(const ChevalleyTable& t, const RootSystem& rs,
                                                         std::uint64_t samples, std::uint64_t seed) {
  Jacobi jac(t, rs);
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::uint64_t>(rs.size());
  for (std::uint64_t k = 0; k < samples; ++k) {
    const auto x = static_cast<RootId>(rng() % n);
    const auto y = static_cast<RootId>(rng() % n);
    const auto z = static_cast<RootId>(rng() % n);
    if (!jac.vanishes(x, y, z)) return JacobiFailure{x, y, z};
  }
  return std::nullopt;
}

bool weighted_cyclic_holds(const ChevalleyTable& t, const RootSystem& rs) {
  for (RootId a = 0; a < rs.size(); ++a) {
    for (RootId b = 0; b < rs.size(); ++b) {
      auto s = rs.sum(a, b);
      if (!s) continue;
      const RootId c = rs.negate(*s);
      const Rational first = Rational(t.n(a, b)) * t.b(c);
      if (first != Rational(t.n(b, c)) * t.b(a) || first != Rational(t.n(c, a)) * t.b(b)) return false;
    }
  }
  return true;
}

bool magnitudes_hold(const ChevalleyTable& t, const RootSystem& rs) {
  for (RootId a = 0; a < rs.size(); ++a) {
    for (RootId b = 0; b < rs.size(); ++b) {
      if (a == b || a == rs.negate(b)) {
        if (t.n(a, b) != 0) return false;
        continue;
      }
      if (!rs.sum_is_root(a, b)) {
        if (t.n(a, b) != 0) return false;
        continue;
      }
      if (std::abs(t.n(a, b)) != rs.root_string(a, b).p + 1) return false;
    }
  }
  return true;
}

bool sign_convention_check(const ChevalleyTable& t, const RootSystem& rs) {
  return !find_jacobi_failure(t, rs) && weighted_cyclic_holds(t, rs);
}

void write_csv(std::ostream& os, const ChevalleyTable& t, const RootSystem& rs) {
  os << "a,b,n,root_a,root_b\n";
  for (RootId a = 0; a < rs.size(); ++a) {
    for (RootId b = 0; b < rs.size(); ++b) {
      if (!t.defined(a, b)) continue;
      os << a << ',' << b << ',' << t.n(a, b) << ',' << rs.root(a).to_string() << ','
         << rs.root(b).to_string() << '\n';
    }
  }
}

}  // namespace flagsym
