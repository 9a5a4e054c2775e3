#include <algorithm>

#include "edgepoly/decompose.hpp"

namespace edgepoly {

void for_each_accepted_weight_vector(const SimpleGraph& g, const Limits& limits,
                                     const AcceptedVisitor& visit) {
  const int d = g.vertex_count();
  if (d > limits.max_enum_vertices)
    throw CapExceeded("decomposition enumeration", d, limits.max_enum_vertices);
  if (!is_connected(g)) throw InputError("enumeration requires a connected graph");

  const CompatibilityTable compat(g);
  const auto edges = g.edges();
  std::vector<int> w(static_cast<std::size_t>(d), -1);
  std::vector<std::size_t> pos, neg;

  // Odometer over {-1,0,1}^d with vertex 1 most significant; vectors whose
  // first nonzero entry is -1 are skipped.
  for (;;) {
    const auto first_nonzero = std::find_if(w.begin(), w.end(), [](int x) { return x != 0; });
    if (first_nonzero != w.end() && *first_nonzero == 1) {
      pos.clear();
      neg.clear();
      SignAssignment s;
      s.signs.resize(edges.size());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const int sum = w[edges[i].u - 1] + w[edges[i].v - 1];
        const int sign = (sum > 0) - (sum < 0);
        s.signs[i] = static_cast<std::int8_t>(sign);
        if (sign > 0) pos.push_back(i);
        if (sign < 0) neg.push_back(i);
      }
      bool ok = !pos.empty() && !neg.empty();
      for (std::size_t a = 0; ok && a < pos.size(); ++a)
        for (std::size_t b = 0; ok && b < neg.size(); ++b) ok = compat.compatible(pos[a], neg[b]);
      if (ok) {
        s.positive = pos.size();
        s.negative = neg.size();
        s.zero = edges.size() - pos.size() - neg.size();
        if (!visit(WeightVector(w), s)) return;
      }
    }
    int i = d - 1;
    while (i >= 0 && w[i] == 1) w[i--] = -1;
    if (i < 0) break;
    ++w[i];
  }
}

std::vector<Decomposition> enumerate_decompositions(const SimpleGraph& g, const Limits& limits) {
  std::vector<Decomposition> out;
  for_each_accepted_weight_vector(g, limits, [&](const WeightVector& w, const SignAssignment& s) {
    std::vector<Edge> plus, minus;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (s.signs[i] >= 0) plus.push_back(edges[i]);
      if (s.signs[i] <= 0) minus.push_back(edges[i]);
    }
    (void)w;
    out.emplace_back(std::move(plus), std::move(minus));
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace edgepoly
