#include "deltakit/fill.hpp"

#include <algorithm>

namespace deltakit {

SpanEmbedding::SpanEmbedding(MonotoneMap h_, MonotoneMap k_)
    : h(std::move(h_)), k(std::move(k_)) {
  if (h.cod() != k.cod()) throw std::invalid_argument("SpanEmbedding: codomain mismatch");
  if (!is_coface(h) || !is_coface(k))
    throw std::invalid_argument("SpanEmbedding: legs must be cofaces");
  std::vector<bool> hit(static_cast<size_t>(h.cod()) + 1, false);
  for (int x = 0; x <= h.dom(); ++x) hit[static_cast<size_t>(h(x))] = true;
  for (int y = 0; y <= k.dom(); ++y) hit[static_cast<size_t>(k(y))] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    throw std::invalid_argument("SpanEmbedding: legs are not jointly surjective");
  if (shared().empty()) throw std::invalid_argument("SpanEmbedding: empty overlap");
}

std::set<int> SpanEmbedding::shared() const {
  std::set<int> him, out;
  for (int x = 0; x <= h.dom(); ++x) him.insert(h(x));
  for (int y = 0; y <= k.dom(); ++y)
    if (him.count(k(y))) out.insert(k(y));
  return out;
}

std::optional<SimplexValue> FillerProvider::span_fill_basic(const SimplexValue& x,
                                                            const SimplexValue& y, int i, int j,
                                                            int n) const {
  if (!(0 <= i && i < j && j <= n))
    throw std::invalid_argument("span_fill_basic: need 0 <= i < j <= n");
  // z has d_j z = x and d_i z = y, so x embeds omitting j and y omitting i.
  return span_fill(x, y, SpanEmbedding(MonotoneMap::coface(n, j), MonotoneMap::coface(n, i)));
}

MonotoneMap subset_inclusion(const std::set<int>& subset, const std::set<int>& superset) {
  if (subset.empty() || superset.empty())
    throw std::invalid_argument("subset_inclusion: empty set has no ordinal");
  std::vector<int> values;
  values.reserve(subset.size());
  int pos = 0;
  auto it = subset.begin();
  for (int v : superset) {
    if (it != subset.end() && *it == v) {
      values.push_back(pos);
      ++it;
    }
    ++pos;
  }
  if (it != subset.end()) throw std::invalid_argument("subset_inclusion: not a subset");
  return MonotoneMap(static_cast<int>(subset.size()) - 1,
                     static_cast<int>(superset.size()) - 1, std::move(values));
}

SimplexValue fill_configuration(const FillerProvider& provider, const SimplicialComplex& S,
                                const std::map<std::set<int>, SimplexValue>& assignment) {
  const auto order =
      provider.inner_only() ? directed_rip_order(S) : rip_order(S);
  if (!order)
    throw NotAcyclicError("fill_configuration: configuration is not " +
                          std::string(provider.inner_only() ? "directed " : "") + "acyclic");
  if (!provider.inner_only() && !S.is_connected())
    throw NotAcyclicError("fill_configuration: configuration is not connected");

  for (const auto& facet : S.facets()) {
    auto it = assignment.find(facet);
    if (it == assignment.end())
      throw std::invalid_argument("fill_configuration: facet without an assigned simplex");
    if (provider.dimension(it->second) != static_cast<int>(facet.size()) - 1)
      throw std::invalid_argument("fill_configuration: assigned simplex has wrong dimension");
  }

  // Facets must agree on shared faces.
  const auto& facets = S.facets();
  for (size_t a = 0; a < facets.size(); ++a)
    for (size_t b = a + 1; b < facets.size(); ++b) {
      std::set<int> shared;
      std::set_intersection(facets[a].begin(), facets[a].end(), facets[b].begin(),
                            facets[b].end(), std::inserter(shared, shared.begin()));
      if (shared.empty()) continue;
      const SimplexValue left =
          provider.face(assignment.at(facets[a]), subset_inclusion(shared, facets[a]));
      const SimplexValue right =
          provider.face(assignment.at(facets[b]), subset_inclusion(shared, facets[b]));
      if (left != right)
        throw IncompatibleAssignmentError("fill_configuration: facets disagree on a shared face",
                                          facets[a], facets[b], shared);
    }

  std::set<int> covered = order->facets.front();
  SimplexValue current = assignment.at(order->facets.front());
  for (size_t k = 1; k < order->facets.size(); ++k) {
    const std::set<int>& facet = order->facets[k];
    std::set<int> next = covered;
    next.insert(facet.begin(), facet.end());
    const SpanEmbedding emb(subset_inclusion(covered, next), subset_inclusion(facet, next));
    auto filled = provider.span_fill(current, assignment.at(facet), emb);
    if (!filled)
      throw NoFillerError("fill_configuration: provider found no span filler at step " +
                              std::to_string(k),
                          static_cast<int>(k));
    current = std::move(*filled);
    covered = std::move(next);
  }
  return current;
}

namespace {

class SSetProvider final : public FillerProvider {
 public:
  SSetProvider(const TruncatedSSet& X, bool inner_only) : X_(X), inner_only_(inner_only) {}

  std::string name() const override { return "sset"; }

  int dimension(const SimplexValue& x) const override {
    return x.at("dim").get<int>();
  }

  SimplexValue face(const SimplexValue& x, const MonotoneMap& coface) const override {
    const auto table = evaluate(X_, coface);
    return SimplexValue{{"dim", coface.dom()},
                        {"cell", table.at(x.at("cell").get<std::string>())}};
  }

  std::optional<SimplexValue> span_fill(const SimplexValue& x, const SimplexValue& y,
                                        const SpanEmbedding& emb) const override {
    if (emb.n() > X_.dim())
      throw OutOfTruncationError("sset provider: span target exceeds truncation");
    const auto via_h = evaluate(X_, emb.h);
    const auto via_k = evaluate(X_, emb.k);
    const std::string want_x = x.at("cell").get<std::string>();
    const std::string want_y = y.at("cell").get<std::string>();
    for (const auto& z : X_.cells(emb.n()))
      if (via_h.at(z) == want_x && via_k.at(z) == want_y)
        return SimplexValue{{"dim", emb.n()}, {"cell", z}};
    return std::nullopt;
  }

  bool inner_only() const override { return inner_only_; }

 private:
  const TruncatedSSet& X_;
  bool inner_only_;
};

}  // namespace

std::unique_ptr<FillerProvider> sset_provider(const TruncatedSSet& X, bool inner_only) {
  return std::make_unique<SSetProvider>(X, inner_only);
}

}  // namespace deltakit
