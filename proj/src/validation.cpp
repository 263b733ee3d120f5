#include "trifree/validation.hpp"

#include <algorithm>
#include <sstream>

#include "trifree/canonical.hpp"
#include "trifree/constructions.hpp"
#include "trifree/formulas.hpp"
#include "trifree/solvers.hpp"

namespace trifree {

namespace {

constexpr int kZCap = 20;  // audit bails out beyond this many high-degree vertices

void add(AuditReport& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

// All independent subsets of pool, including the empty set.
void independent_subsets(const Graph& g, VertexSet pool, VertexSet acc,
                         std::vector<VertexSet>& out) {
  out.push_back(acc);
  for_set_bits(pool, [&](int v) {
    VertexSet below = (VertexSet{1} << v) - 1;
    independent_subsets(g, pool & below & ~g.row(v), set_with(acc, v), out);
  });
}

}  // namespace

AuditReport prop32_audit(const Graph& g, VertexSet a, VertexSet q) {
  AuditReport r;
  r.subject = canonical_form(g);
  int n = g.order();
  int s = set_size(a);

  bool range_ok = 3 * s >= n && 2 * s <= n;
  add(r, "s_in_range", range_ok,
      "s=" + std::to_string(s) + ", n=" + std::to_string(n) + ", need n/3 <= s <= n/2");
  add(r, "a_independent", g.is_independent(a));
  add(r, "triangle_free", is_triangle_free(g));

  bool rest_ok = !has_independent_set(g, g.vertices() & ~a, s + 1);
  add(r, "alpha_of_rest_at_most_s", rest_ok);

  VertexSet z = 0;
  for (int v = 0; v < n; ++v)
    if (!set_contains(a, v) && g.degree(v) > s) z = set_with(z, v);

  bool q_ok = (q & (a | z)) == 0 && (q & ~g.vertices()) == 0 && set_size(q) >= 3 * s - n;
  add(r, "q_valid", q_ok,
      "|q|=" + std::to_string(set_size(q)) + ", need >= " + std::to_string(3 * s - n) +
          " and disjoint from a and z");

  if (set_size(z) > kZCap) {
    add(r, "z_matchability", false,
        "not audited: |z|=" + std::to_string(set_size(z)) + " exceeds cap " +
            std::to_string(kZCap));
  } else {
    std::vector<VertexSet> subsets;
    independent_subsets(g, z, 0, subsets);
    bool all_ok = true;
    std::string culprit;
    for (VertexSet zp : subsets) {
      VertexSet target = g.vertices() & ~(a | zp | q);
      if (!is_matchable(g, zp, target)) {
        all_ok = false;
        std::ostringstream os;
        os << "independent z' {";
        for (int v : set_members(zp)) os << v << " ";
        os << "} not matchable";
        culprit = os.str();
        break;
      }
    }
    add(r, "z_matchability", all_ok, culprit);
  }

  if (r.overall()) {
    long long bound = static_cast<long long>(n) * n - 4LL * n * s + 5LL * s * s;
    long long e = g.edge_count();
    add(r, "edge_bound", e <= bound,
        "e=" + std::to_string(e) + " vs n^2-4ns+5s^2=" + std::to_string(bound));
  }
  return r;
}

AuditReport extremal_family_audit(std::span<const Graph> witnesses, int n, int s) {
  AuditReport r;
  r.subject = "ex(" + std::to_string(n) + "," + std::to_string(s) + ") witnesses";
  if (witnesses.empty()) {
    add(r, "witness_list", true, "empty list, vacuous pass");
    return r;
  }

  // order deterministically by canonical code
  std::vector<std::pair<std::string, const Graph*>> ordered;
  for (const Graph& w : witnesses) ordered.emplace_back(canonical_form(w), &w);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  Graph pentagon = andrasfai(2);
  Graph wagner = andrasfai(3);

  for (const auto& [code, wp] : ordered) {
    const Graph& w = *wp;
    std::string id = code + ": ";
    bool basic = w.order() == n && is_triangle_free(w) && independence_number(w) <= s;
    add(r, id + "preconditions", basic);
    if (!basic) continue;

    if (n >= 2 * s) {
      bool two_sets = false;
      for (VertexSet cand : independent_sets_of_size(w, s))
        if (has_independent_set(w, w.vertices() & ~cand, s)) {
          two_sets = true;
          break;
        }
      add(r, id + "two_disjoint_independent_s_sets", two_sets);
    }

    auto w2 = is_blowup_of(w, pentagon);
    auto w3 = w2 ? std::nullopt : is_blowup_of(w, wagner);
    std::string cls = w2 ? "pentagon" : (w3 ? "wagner" : "none");

    // expected classification from the position of s/n
    bool in_pentagon_range = 5 * s >= 2 * n && 2 * s <= n;   // [2n/5, n/2]
    bool in_wagner_range = 8 * s >= 3 * n && 5 * s <= 2 * n; // [3n/8, 2n/5]
    bool ok;
    std::string expect;
    if (in_pentagon_range && in_wagner_range) {
      ok = w2.has_value() || w3.has_value();
      expect = "pentagon or wagner (boundary)";
    } else if (in_pentagon_range) {
      ok = w2.has_value();
      expect = "pentagon";
    } else if (in_wagner_range) {
      ok = w2.has_value() || w3.has_value();
      expect = "wagner (pentagon blow-ups embed)";
    } else {
      ok = true;  // outside the proven ranges the classification is informative only
      expect = "unconstrained";
    }
    add(r, id + "blowup_classification", ok, "classified " + cls + ", expected " + expect);
  }
  return r;
}

}  // namespace trifree
