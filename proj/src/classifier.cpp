#include "specht/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/gauss.hpp"

namespace specht {

namespace {

struct Ctx {
  int e;
  bool cong(long x, long y) const { return residue(x - y, e) == 0; }
  bool zero(long x) const { return residue(x, e) == 0; }
  int res(long x) const { return residue(x, e); }
};

int one_row(const Partition& mu, const Ctx& c) {
  const int b = mu.length();
  if (b <= 1) return 1;
  if (!c.cong(mu(1), -1)) return 0;
  for (int i = 2; i < b; ++i)
    if (mu(i) != c.e - 1) return 0;
  // For b >= 3 this follows from mu_{b-1} = e-1; for b = 2 it is an extra condition.
  return mu(b) <= c.e - 1 ? 1 : 0;
}

int two_part(int l1, int l2, const Partition& mu, const Ctx& c) {
  return (l1 - mu(1) < c.e && c.zero(mu(1) - l2 + 1)) ? 1 : 0;
}

int three_part(int l1, int l2, const Partition& mu, const Ctx& c) {
  const int e = c.e, m1 = mu(1), m2 = mu(2), m3 = mu(3);
  if (m2 == e - 1 && c.zero(m1 - l2 + 1) && l2 <= m3) return 1;
  if (c.zero(m2 + 1) && c.zero(m1 - l2 + 1) && l2 >= m3 && m3 <= e - 1 && l1 - m1 < e) return 1;
  if (c.zero(m1 + 2) && m2 == l2 && m3 <= e - 1) return 1;
  if (c.zero(m1 + 2) && m2 == l2 && m3 <= 2 * e - 2 && c.res(l2 + 1) > c.res(m3)) return 1;
  if (c.zero(m1 + 2) && m2 != l2 && l2 > m3 && c.zero(l1 - m2 + 1) && m3 <= e - 1 && l1 - m1 < e) return 1;
  return 0;
}

int third_is_em1(int l1, int l2, const Partition& mu, const Ctx& c) {
  const int e = c.e, m1 = mu(1), m2 = mu(2);
  if (mu(mu.length() - 1) != e - 1) return 0;
  if (m2 == e - 1 && c.zero(m1 - l2 + 1)) return 1;
  if (c.zero(m2 + 1) && c.zero(m1 - l2 + 1) && l2 >= m2 && l1 < m1 + m2 && l1 - m1 < e) return 1;
  if (c.zero(m1 + 2) && c.zero(l1 - m2 + 1) && l2 >= m2 && l1 < m1 + m2 && l1 - m1 < e) return 1;
  if (c.zero(m1 + 2) && c.cong(m2, l2) && l2 >= m2 && c.res(m2 + 1) <= l1 - m1) return 1;
  return 0;
}

// (sa + x, sb + y) when that is a partition; empty otherwise.
Partition shifted(long sa, long sb, long x, long y) {
  const long a = sa + x, b = sb + y;
  if (a < 0 || b < 0 || a < b) return Partition();
  return Partition({static_cast<int>(a), static_cast<int>(b)});
}

std::vector<Partition> good_shape_targets(const Partition& mu, const GoodShapeData& g, const Ctx& c) {
  const long e = c.e, N = g.n_e_minus_1;
  const long ma = mu(g.alpha), mb = mu(g.beta);
  const long sa = mu(1) + (N + 1) * (e - 1), sb = mu(2) + (N - 1) * (e - 1);
  std::vector<Partition> out;
  auto keep = [&](const Partition& p) {
    if (p.n() == mu.n() && p.length() > 0) out.push_back(p);
  };
  if (N == 0) {
    const Partition p1 = shifted(sa, sb, mb, ma);
    const Partition p2 = shifted(sa, sb, ma - e + 1, mb + (e - 1));
    if (e - 1 < mb || ma < e - 1) keep(p1);
    else if (0 < mb && mb < e - 1 && e - 1 < ma) {
      keep(p1);
      keep(p2);
    } else if (mb == 0 && e - 1 < ma) keep(p2);
    return out;
  }
  if (mb == 0 && ma < e - 1) {
    keep(shifted(sa, sb, mb, ma + N * (e - 1)));
    for (long m = 0; ma + (N - 1) * (e - 1) >= m * e; ++m)
      keep(shifted(sa, sb, ma + (N - 1) * (e - 1) - m * e, m * e + e - 1));
  } else if (mb < e - 1 && e - 1 < ma) {
    keep(shifted(sa, sb, ma - e + 1, mb + (N + 1) * (e - 1)));
    for (long k = 0; mb + (N + 1) * (e - 1) >= ma + k * e; ++k)
      keep(shifted(sa, sb, mb + N * (e - 1) - k * e, ma + k * e));
  }
  return out;
}

}  // namespace

GoodShapeData good_shape(const Partition& mu, int e) {
  if (e < 2) throw std::invalid_argument("good_shape: e must be at least 2");
  GoodShapeData g;
  const int b = mu.length();
  if (b < 4) return g;
  const Ctx c{e};
  if (!c.zero(mu(1) + 2) || !c.zero(mu(2) + 2)) return g;
  if (mu(3) > 2 * e - 2) return g;
  int n_em1 = 0, odd = 0, small = 0, mid = 0;
  for (int i = 1; i <= b; ++i)
    if (mu(i) == e - 1) ++n_em1;
  for (int i = 3; i <= b; ++i) {
    if (mu(i) != 2 * e - 2 && mu(i) != e - 1) ++odd;
    if (mu(i) < e - 1) ++small;
    if (mu(i) > e - 1 && mu(i) < 2 * e - 2) ++mid;
  }
  if (odd > 2) return g;
  if (n_em1 > 0 && (small > 1 || mid > 1)) return g;
  // mu* has to be a partition; with no part equal to e-1 this excludes mu_2 = e-2.
  Partition star = shifted(mu(1), mu(2), static_cast<long>(n_em1 + 1) * (e - 1), static_cast<long>(n_em1 - 1) * (e - 1));
  if (star.length() == 0) return g;
  g.is_good = true;
  g.n_e_minus_1 = n_em1;
  g.mu_star = std::move(star);
  auto special = [&](int i) { return mu(i) == 2 * e - 2 || mu(i) == e - 1; };
  g.alpha = b + 1;
  for (int i = 3; i <= b; ++i)
    if (!special(i)) {
      g.alpha = i;
      break;
    }
  g.beta = b + 1;
  for (int i = g.alpha + 1; i <= b; ++i)
    if (!special(i)) {
      g.beta = i;
      break;
    }
  return g;
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::NotDominated: return "not-dominated";
    case Branch::OneRow: return "one-row";
    case Branch::RowStrip: return "row-strip";
    case Branch::TwoPart: return "two-part";
    case Branch::ThreePart: return "three-part";
    case Branch::ThirdIsEm1: return "third-is-e-1";
    case Branch::GoodShapeN0: return "good-shape-n0";
    case Branch::GoodShapeN1: return "good-shape-n1";
    case Branch::Last: return "last";
  }
  return "?";
}

bool classifier_applies(const Partition& lambda, const Partition& mu) {
  return lambda.n() == mu.n() && lambda.length() <= 2 && mu(1) >= lambda(2);
}

Classification classify_detailed(const Partition& lambda, const Partition& mu, int e) {
  if (e < 2) throw std::invalid_argument("classify: e must be at least 2");
  if (lambda.n() != mu.n()) throw std::invalid_argument("classify: partitions of different n");
  if (lambda.length() > 2) throw std::invalid_argument("classify: lambda has more than two rows");
  if (mu(1) < lambda(2)) throw std::invalid_argument("classify: mu_1 < lambda_2");
  const Ctx c{e};
  Classification r;
  const int l1 = lambda(1), l2 = lambda(2);
  if (mu(1) > l1) {
    r.branch = Branch::NotDominated;
    return r;
  }
  if (lambda.length() <= 1) {
    r.branch = Branch::OneRow;
    r.dim = one_row(mu, c);
    return r;
  }
  if (mu(1) == l1) {
    r.branch = Branch::RowStrip;
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    r.dim = one_row(Partition(rest), c);
    return r;
  }
  switch (mu.length()) {
    case 2:
      r.branch = Branch::TwoPart;
      r.dim = two_part(l1, l2, mu, c);
      return r;
    case 3:
      r.branch = Branch::ThreePart;
      r.dim = three_part(l1, l2, mu, c);
      return r;
    default:
      break;
  }
  if (mu(3) == e - 1) {
    r.branch = Branch::ThirdIsEm1;
    r.dim = third_is_em1(l1, l2, mu, c);
    return r;
  }
  const GoodShapeData g = good_shape(mu, e);
  if (!g.is_good) {
    r.branch = Branch::Last;
    return r;
  }
  r.branch = g.n_e_minus_1 == 0 ? Branch::GoodShapeN0 : Branch::GoodShapeN1;
  r.targets = good_shape_targets(mu, g, c);
  r.dim = std::find(r.targets.begin(), r.targets.end(), lambda) != r.targets.end() ? 1 : 0;
  return r;
}

int classify(const Partition& lambda, const Partition& mu, int e) { return classify_detailed(lambda, mu, e).dim; }

}  // namespace specht
