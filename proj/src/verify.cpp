#include "arf/verify.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

#include "arf/errors.hpp"
#include "arf/genus1.hpp"

namespace arf {

namespace {

using Vec = std::vector<long long>;

bool leq(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool strictly_below(const Vec& a, const Vec& b) { return a != b && leq(a, b); }

Vec component_min(const Vec& a, const Vec& b) {
  Vec m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

}  // namespace

AxiomReport check_good_axioms(const FiniteGoodSemigroup& s) {
  AxiomReport report;
  const int r = s.rank();
  const auto& elems = s.elements();
  const Vec zero(r, 0);

  if (!s.contains(zero))
    report.violations.push_back({"zero-membership", {}});

  // locality: only the zero vector has a zero component
  for (const Vec& v : elems) {
    if (v == zero) continue;
    if (std::find(v.begin(), v.end(), 0LL) != v.end()) {
      report.local = false;
      report.nonlocal_witnesses.push_back(v);
    }
  }

  // conductor saturation inside the box
  {
    Vec v = s.conductor();
    while (true) {
      ++report.checked;
      if (!s.contains(v)) report.violations.push_back({"saturation", {v}});
      int pos = 0;
      while (pos < r && v[pos] == s.box()[pos] - 1) {
        v[pos] = s.conductor()[pos];
        ++pos;
      }
      if (pos == r) break;
      ++v[pos];
    }
  }

  for (size_t x = 0; x < elems.size(); ++x) {
    for (size_t y = x + 1; y < elems.size(); ++y) {
      const Vec& a = elems[x];
      const Vec& b = elems[y];

      // min-closure
      ++report.checked;
      const Vec m = component_min(a, b);
      if (!s.contains(m))
        report.violations.push_back({"min-closure", {a, b, m}});

      // axiom 2: a[i] = b[i] needs a witness c with c[i] > a[i],
      // c[j] >= min(a[j],b[j]) everywhere, equality where a[j] != b[j]
      for (int i = 0; i < r; ++i) {
        if (a[i] != b[i]) continue;
        if (a[i] + 1 >= s.box()[i]) {
          // a witness may only exist past the window
          ++report.unchecked;
          continue;
        }
        bool found = false;
        for (const Vec& c : elems) {
          if (c[i] <= a[i]) continue;
          bool fits = true;
          for (int j = 0; j < r && fits; ++j) {
            if (j == i) continue;
            if (a[j] == b[j]) {
              if (c[j] < a[j]) fits = false;
            } else if (c[j] != m[j]) {
              fits = false;
            }
          }
          if (fits) {
            found = true;
            break;
          }
        }
        ++report.checked;
        if (!found) report.violations.push_back({"axiom2", {a, b}});
      }
    }
  }
  return report;
}

AxiomReport check_arf_axiom(const FiniteGoodSemigroup& s) {
  AxiomReport report;
  const int r = s.rank();
  const auto& elems = s.elements();
  for (const Vec& alpha : elems) {
    std::vector<const Vec*> above;
    for (const Vec& b : elems)
      if (leq(alpha, b)) above.push_back(&b);
    for (size_t x = 0; x < above.size(); ++x) {
      for (size_t y = x; y < above.size(); ++y) {
        Vec sum(r);
        bool in_box = true;
        for (int i = 0; i < r; ++i) {
          sum[i] = (*above[x])[i] + (*above[y])[i] - alpha[i];
          if (sum[i] >= s.box()[i]) in_box = false;
        }
        if (!in_box) {
          ++report.unchecked;
          continue;
        }
        ++report.checked;
        if (!s.contains(sum))
          report.violations.push_back({"arf", {alpha, *above[x], *above[y], sum}});
      }
    }
  }
  return report;
}

long long saturated_chain_length(const FiniteGoodSemigroup& s, const Vec& from,
                                 const Vec& to, int sample_runs,
                                 uint64_t seed) {
  const int r = s.rank();
  if (static_cast<int>(from.size()) != r || static_cast<int>(to.size()) != r)
    throw Error(errc::invalid_argument, "vector arity mismatch");
  if (!leq(from, to))
    throw Error(errc::not_comparable, "chain endpoints are not comparable");
  if (!s.contains(from) || !s.contains(to))
    throw Error(errc::not_members, "chain endpoints must belong to S");
  if (sample_runs < 1) sample_runs = 1;

  long long agreed = -1;
  for (int run = 0; run < sample_runs; ++run) {
    std::mt19937_64 rng(seed + run);
    Vec cur = from;
    long long len = 0;
    while (cur != to) {
      // candidates strictly above cur, below to
      std::vector<const Vec*> cand;
      for (const Vec& v : s.elements())
        if (strictly_below(cur, v) && leq(v, to)) cand.push_back(&v);
      assert(!cand.empty());  // `to` always qualifies
      std::vector<const Vec*> minimal;
      for (const Vec* v : cand) {
        bool is_min = true;
        for (const Vec* w : cand)
          if (w != v && strictly_below(*w, *v)) {
            is_min = false;
            break;
          }
        if (is_min) minimal.push_back(v);
      }
      cur = *minimal[rng() % minimal.size()];
      ++len;
    }
    if (agreed == -1) {
      agreed = len;
    } else if (agreed != len) {
      throw std::logic_error(
          "saturated chains of different lengths between the same endpoints");
    }
  }
  return agreed;
}

long long chain_genus(const UntwistedTree& t) {
  const Vec delta = t.conductor();
  Vec box(delta);
  for (auto& b : box) ++b;
  const FiniteGoodSemigroup s = expand_semigroup(t, box);
  long long ambient = 0;
  for (long long c : delta) ambient += c;
  const Vec zero(delta.size(), 0);
  return ambient - saturated_chain_length(s, zero, delta);
}

namespace {

void cross_gluings(const std::vector<MultiplicitySequence>& seqs, int remaining,
                   size_t seam, std::vector<int>& gluing,
                   std::vector<UntwistedTree>& out) {
  const size_t seams = seqs.size() - 1;
  if (seam == seams) {
    if (remaining == 0)
      out.push_back(UntwistedTree::validated(seqs, gluing));
    return;
  }
  const int seams_left = static_cast<int>(seams - seam - 1);
  const auto comp = compatibility(seqs[seam], seqs[seam + 1]);
  for (int p = 1; p + seams_left <= remaining; ++p) {
    if (!comp.allows(p)) break;
    gluing.push_back(p);
    cross_gluings(seqs, remaining - p, seam + 1, gluing, out);
    gluing.pop_back();
  }
}

void cross_sequences(int rank, int genus,
                     const std::vector<std::vector<MultiplicitySequence>>& gen1,
                     int branch, int genus_used,
                     std::vector<MultiplicitySequence>& seqs,
                     std::vector<UntwistedTree>& out) {
  if (branch == rank) {
    const int gluing_total = genus - genus_used;
    if (rank == 1) {
      if (gluing_total == 0)
        out.push_back(UntwistedTree::validated(seqs, {}));
      return;
    }
    if (gluing_total < rank - 1) return;
    std::vector<int> gluing;
    cross_gluings(seqs, gluing_total, 0, gluing, out);
    return;
  }
  const int budget = genus - genus_used - (rank - 1);  // gluing needs rank-1
  for (int g = 0; g <= budget; ++g) {
    for (const auto& m : gen1[g]) {
      seqs.push_back(m);
      cross_sequences(rank, genus, gen1, branch + 1, genus_used + g, seqs, out);
      seqs.pop_back();
    }
  }
}

}  // namespace

std::vector<UntwistedTree> brute_force_genus_trees(int rank, int genus) {
  if (rank < 1) throw Error(errc::invalid_argument, "rank must be >= 1");
  if (genus < 0) throw Error(errc::invalid_argument, "genus must be >= 0");
  std::vector<UntwistedTree> out;
  if (rank == 1) {
    for (const auto& m : brute_force_genus(genus))
      out.push_back(UntwistedTree::validated({m}, {}));
    return out;
  }
  if (genus < rank - 1) return out;
  std::vector<std::vector<MultiplicitySequence>> gen1(genus + 1);
  for (int g = 0; g <= genus - (rank - 1); ++g) gen1[g] = brute_force_genus(g);
  std::vector<MultiplicitySequence> seqs;
  cross_sequences(rank, genus, gen1, 0, 0, seqs, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace arf
