#pragma once

#include <map>
#include <vector>

#include "osc/weyl.hpp"

namespace oracle {

using namespace osc;

// Brute-force oracle: words in letters x_v / d_v, rewritten one adjacent pair at a time
// (d_v x_v -> x_v d_v + 1, other out-of-order pairs swap) until normally ordered.
struct Letter {
  bool d;
  int v;
  bool operator<(const Letter& o) const { return d != o.d ? d < o.d : v < o.v; }
  bool operator==(const Letter& o) const { return d == o.d && v == o.v; }
};
using Word = std::vector<Letter>;

inline std::map<Word, long> rewrite_to_normal(const Word& w0) {
  std::map<Word, long> pending{{w0, 1}}, done;
  while (!pending.empty()) {
    auto [w, c] = *pending.begin();
    pending.erase(pending.begin());
    std::size_t p = 0;
    while (p + 1 < w.size() && !(w[p + 1] < w[p])) ++p;
    if (p + 1 >= w.size()) {
      done[w] += c;
      continue;
    }
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    pending[swapped] += c;
    if (w[p].d && !w[p + 1].d && w[p].v == w[p + 1].v) {
      Word dropped;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (i != p && i != p + 1) dropped.push_back(w[i]);
      pending[dropped] += c;
    }
  }
  return done;
}

inline Word word_of(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  Word w;
  for (int v = 0; v < static_cast<int>(a.size()); ++v)
    for (unsigned e = 0; e < a[v]; ++e) w.push_back({false, v});
  for (int v = 0; v < static_cast<int>(b.size()); ++v)
    for (unsigned e = 0; e < b[v]; ++e) w.push_back({true, v});
  return w;
}

inline WeylOp from_words(const TablePtr& t, const std::map<Word, long>& ws) {
  WeylOp r(t);
  for (auto& [w, c] : ws) {
    std::vector<unsigned> a(t->size(), 0), b(t->size(), 0);
    for (auto& l : w) (l.d ? b : a)[l.v]++;
    r.add_term(Monomial::from_dense(a), Monomial::from_dense(b), Scalar(c));
  }
  return r;
}

}  // namespace oracle
