#include "deltakit/instances.hpp"

#include <algorithm>
#include <sstream>

namespace deltakit {

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
  }
}

std::string format_rational(const Rat& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Table::Table(int arity, std::vector<std::string> alphabet,
             std::set<std::vector<std::string>> rows)
    : arity_(arity), alphabet_(std::move(alphabet)), rows_(std::move(rows)) {
  if (arity_ < 1) throw std::invalid_argument("Table: arity must be >= 1");
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  for (const auto& row : rows_) {
    if (row.size() != static_cast<size_t>(arity_))
      throw std::invalid_argument("Table: row width does not match arity");
    for (const auto& v : row)
      if (!std::binary_search(alphabet_.begin(), alphabet_.end(), v))
        throw std::invalid_argument("Table: value '" + v + "' outside the alphabet");
  }
}

Table table_face(const Table& T, const MonotoneMap& f) {
  if (f.cod() + 1 != T.arity())
    throw std::invalid_argument("table_face: map codomain does not match table arity");
  std::set<std::vector<std::string>> rows;
  for (const auto& row : T.rows()) {
    std::vector<std::string> out(static_cast<size_t>(f.dom()) + 1);
    for (int i = 0; i <= f.dom(); ++i) out[static_cast<size_t>(i)] = row[static_cast<size_t>(f(i))];
    rows.insert(std::move(out));
  }
  return Table(f.dom() + 1, T.alphabet(), std::move(rows));
}

namespace {

std::string describe_rows(const std::set<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& row : rows) {
    if (!first) os << ", ";
    first = false;
    os << "(";
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << ")";
  }
  os << "}";
  return os.str();
}

// Positions of the shared values inside a coface's domain.
std::vector<int> shared_positions(const MonotoneMap& leg, const std::set<int>& shared) {
  std::vector<int> out;
  for (int x = 0; x <= leg.dom(); ++x)
    if (shared.count(leg(x))) out.push_back(x);
  return out;
}

}  // namespace

Table join(const Table& A, const Table& B, const SpanEmbedding& emb) {
  if (A.arity() != emb.h.dom() + 1 || B.arity() != emb.k.dom() + 1)
    throw std::invalid_argument("join: table arities do not match the embedding");
  if (A.alphabet() != B.alphabet())
    throw std::invalid_argument("join: tables must share one value alphabet");
  const std::set<int> shared = emb.shared();
  const std::vector<int> apos = shared_positions(emb.h, shared);
  const std::vector<int> bpos = shared_positions(emb.k, shared);

  auto key_of = [](const std::vector<std::string>& row, const std::vector<int>& pos) {
    std::vector<std::string> key;
    key.reserve(pos.size());
    for (int p : pos) key.push_back(row[static_cast<size_t>(p)]);
    return key;
  };

  // Precondition: equal projections onto the shared columns.
  std::set<std::vector<std::string>> aproj, bproj;
  for (const auto& row : A.rows()) aproj.insert(key_of(row, apos));
  for (const auto& row : B.rows()) bproj.insert(key_of(row, bpos));
  if (aproj != bproj)
    throw IncompatibleProjectionsError("join: shared-column projections differ: " +
                                       describe_rows(aproj) + " vs " + describe_rows(bproj));

  std::map<std::vector<std::string>, std::vector<const std::vector<std::string>*>> index;
  for (const auto& row : B.rows()) index[key_of(row, bpos)].push_back(&row);

  const int n = emb.n();
  std::set<std::vector<std::string>> rows;
  for (const auto& arow : A.rows()) {
    auto it = index.find(key_of(arow, apos));
    if (it == index.end()) continue;
    for (const auto* brow : it->second) {
      std::vector<std::string> merged(static_cast<size_t>(n) + 1);
      for (int x = 0; x <= emb.h.dom(); ++x)
        merged[static_cast<size_t>(emb.h(x))] = arow[static_cast<size_t>(x)];
      for (int y = 0; y <= emb.k.dom(); ++y)
        merged[static_cast<size_t>(emb.k(y))] = (*brow)[static_cast<size_t>(y)];
      rows.insert(std::move(merged));
    }
  }
  return Table(n + 1, A.alphabet(), std::move(rows));
}

Pseudometric::Pseudometric(std::vector<std::vector<Rat>> dist) : dist_(std::move(dist)) {
  const size_t n = dist_.size();
  if (n == 0) throw std::invalid_argument("Pseudometric: need at least one point");
  for (const auto& row : dist_)
    if (row.size() != n) throw std::invalid_argument("Pseudometric: matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    if (dist_[i][i] != Rat(0)) throw std::invalid_argument("Pseudometric: nonzero diagonal");
    for (size_t j = 0; j < n; ++j) {
      if (dist_[i][j] < Rat(0)) throw std::invalid_argument("Pseudometric: negative distance");
      if (dist_[i][j] != dist_[j][i]) throw std::invalid_argument("Pseudometric: not symmetric");
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (dist_[i][k] > dist_[i][j] + dist_[j][k])
          throw std::invalid_argument("Pseudometric: triangle inequality fails at (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
}

Pseudometric metric_pullback(const Pseudometric& d, const MonotoneMap& f) {
  if (f.cod() + 1 != d.points())
    throw std::invalid_argument("metric_pullback: map codomain does not match point count");
  const size_t m = static_cast<size_t>(f.dom()) + 1;
  std::vector<std::vector<Rat>> out(m, std::vector<Rat>(m, Rat(0)));
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      out[x][y] = d.d(f(static_cast<int>(x)), f(static_cast<int>(y)));
  return Pseudometric(std::move(out));
}

Pseudometric metric_fill(const Pseudometric& dp, const Pseudometric& dq,
                         const SpanEmbedding& emb) {
  if (dp.points() != emb.h.dom() + 1 || dq.points() != emb.k.dom() + 1)
    throw std::invalid_argument("metric_fill: point counts do not match the embedding");
  const int n = emb.n();
  std::vector<int> hpos(static_cast<size_t>(n) + 1, -1), kpos(static_cast<size_t>(n) + 1, -1);
  for (int x = 0; x <= emb.h.dom(); ++x) hpos[static_cast<size_t>(emb.h(x))] = x;
  for (int y = 0; y <= emb.k.dom(); ++y) kpos[static_cast<size_t>(emb.k(y))] = y;
  const std::set<int> shared = emb.shared();

  for (int u : shared)
    for (int v : shared)
      if (dp.d(hpos[static_cast<size_t>(u)], hpos[static_cast<size_t>(v)]) !=
          dq.d(kpos[static_cast<size_t>(u)], kpos[static_cast<size_t>(v)]))
        throw IncompatibleRestrictionsError(
            "metric_fill: restrictions disagree on shared points " + std::to_string(u) + "," +
            std::to_string(v));

  std::vector<std::vector<Rat>> out(static_cast<size_t>(n) + 1,
                                    std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const int hi = hpos[static_cast<size_t>(i)], hj = hpos[static_cast<size_t>(j)];
      const int ki = kpos[static_cast<size_t>(i)], kj = kpos[static_cast<size_t>(j)];
      if (hi >= 0 && hj >= 0) {
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] = dp.d(hi, hj);
      } else if (ki >= 0 && kj >= 0) {
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] = dq.d(ki, kj);
      } else {
        // one point on each side: shortest path through the shared face
        const bool i_in_h = hi >= 0;
        const int pside = i_in_h ? hi : hj;
        const int qside = i_in_h ? kj : ki;
        bool first = true;
        Rat best(0);
        for (int s : shared) {
          const Rat cand = dp.d(pside, hpos[static_cast<size_t>(s)]) +
                           dq.d(kpos[static_cast<size_t>(s)], qside);
          if (first || cand < best) {
            best = cand;
            first = false;
          }
        }
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] = best;
      }
    }
  return Pseudometric(std::move(out));
}

Distribution::Distribution(int arity, std::vector<std::string> alphabet,
                           std::map<std::vector<std::string>, Rat> prob)
    : arity_(arity), alphabet_(std::move(alphabet)), prob_(std::move(prob)) {
  if (arity_ < 1) throw std::invalid_argument("Distribution: arity must be >= 1");
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  Rat total(0);
  for (auto it = prob_.begin(); it != prob_.end();) {
    if (it->first.size() != static_cast<size_t>(arity_))
      throw std::invalid_argument("Distribution: tuple width does not match arity");
    for (const auto& v : it->first)
      if (!std::binary_search(alphabet_.begin(), alphabet_.end(), v))
        throw std::invalid_argument("Distribution: value '" + v + "' outside the alphabet");
    if (it->second < Rat(0)) throw std::invalid_argument("Distribution: negative probability");
    total += it->second;
    if (it->second == Rat(0))
      it = prob_.erase(it);
    else
      ++it;
  }
  if (total != Rat(1))
    throw std::invalid_argument("Distribution: total mass " + format_rational(total) + " != 1");
}

Rat Distribution::mass(const std::vector<std::string>& tuple) const {
  auto it = prob_.find(tuple);
  return it == prob_.end() ? Rat(0) : it->second;
}

Distribution dist_face(const Distribution& P, const MonotoneMap& f) {
  if (f.cod() + 1 != P.arity())
    throw std::invalid_argument("dist_face: map codomain does not match arity");
  std::map<std::vector<std::string>, Rat> out;
  for (const auto& [tuple, mass] : P.prob()) {
    std::vector<std::string> img(static_cast<size_t>(f.dom()) + 1);
    for (int i = 0; i <= f.dom(); ++i) img[static_cast<size_t>(i)] = tuple[static_cast<size_t>(f(i))];
    out[img] += mass;
  }
  return Distribution(f.dom() + 1, P.alphabet(), std::move(out));
}

Distribution dist_fill(const Distribution& PA, const Distribution& PB, const SpanEmbedding& emb) {
  if (PA.arity() != emb.h.dom() + 1 || PB.arity() != emb.k.dom() + 1)
    throw std::invalid_argument("dist_fill: arities do not match the embedding");
  if (PA.alphabet() != PB.alphabet())
    throw std::invalid_argument("dist_fill: distributions must share one alphabet");
  const std::set<int> shared = emb.shared();
  const std::vector<int> apos = shared_positions(emb.h, shared);
  const std::vector<int> bpos = shared_positions(emb.k, shared);

  auto key_of = [](const std::vector<std::string>& tuple, const std::vector<int>& pos) {
    std::vector<std::string> key;
    key.reserve(pos.size());
    for (int p : pos) key.push_back(tuple[static_cast<size_t>(p)]);
    return key;
  };

  std::map<std::vector<std::string>, Rat> marginal_a, marginal_b;
  for (const auto& [tuple, mass] : PA.prob()) marginal_a[key_of(tuple, apos)] += mass;
  for (const auto& [tuple, mass] : PB.prob()) marginal_b[key_of(tuple, bpos)] += mass;
  if (marginal_a != marginal_b)
    throw IncompatibleMarginalsError("dist_fill: shared marginals differ");

  std::map<std::vector<std::string>, std::vector<const std::pair<const std::vector<std::string>, Rat>*>>
      index;
  for (const auto& entry : PB.prob()) index[key_of(entry.first, bpos)].push_back(&entry);

  const int n = emb.n();
  std::map<std::vector<std::string>, Rat> out;
  for (const auto& aentry : PA.prob()) {
    const auto key = key_of(aentry.first, apos);
    auto it = index.find(key);
    if (it == index.end()) continue;
    const Rat shared_mass = marginal_a.at(key);  // positive on the support
    for (const auto* bentry : it->second) {
      std::vector<std::string> merged(static_cast<size_t>(n) + 1);
      for (int x = 0; x <= emb.h.dom(); ++x)
        merged[static_cast<size_t>(emb.h(x))] = aentry.first[static_cast<size_t>(x)];
      for (int y = 0; y <= emb.k.dom(); ++y)
        merged[static_cast<size_t>(emb.k(y))] = bentry->first[static_cast<size_t>(y)];
      out[merged] += aentry.second * bentry->second / shared_mass;
    }
  }
  return Distribution(n + 1, PA.alphabet(), std::move(out));
}

SimplexValue table_to_json(const Table& T) {
  SimplexValue rows = SimplexValue::array();
  for (const auto& row : T.rows()) rows.push_back(row);
  return SimplexValue{{"arity", T.arity()}, {"values", T.alphabet()}, {"rows", rows}};
}

Table table_from_json(const SimplexValue& j) {
  const int arity = j.at("arity").get<int>();
  std::vector<std::string> alphabet;
  for (const auto& v : j.at("values"))
    alphabet.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  std::set<std::vector<std::string>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    rows.insert(std::move(r));
  }
  return Table(arity, std::move(alphabet), std::move(rows));
}

SimplexValue metric_to_json(const Pseudometric& d) {
  SimplexValue rows = SimplexValue::array();
  for (int i = 0; i < d.points(); ++i) {
    SimplexValue row = SimplexValue::array();
    for (int j = 0; j < d.points(); ++j) row.push_back(format_rational(d.d(i, j)));
    rows.push_back(row);
  }
  return SimplexValue{{"dist", rows}};
}

Pseudometric metric_from_json(const SimplexValue& j) {
  const SimplexValue& matrix = j.is_object() ? j.at("dist") : j;
  std::vector<std::vector<Rat>> dist;
  for (const auto& row : matrix) {
    std::vector<Rat> r;
    for (const auto& v : row)
      r.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                : Rat(v.get<long long>()));
    dist.push_back(std::move(r));
  }
  return Pseudometric(std::move(dist));
}

namespace {

std::string join_key(const std::vector<std::string>& tuple) {
  std::string out;
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += tuple[i];
  }
  return out;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

SimplexValue dist_to_json(const Distribution& P) {
  SimplexValue prob = SimplexValue::object();
  for (const auto& [tuple, mass] : P.prob()) prob[join_key(tuple)] = format_rational(mass);
  return SimplexValue{{"arity", P.arity()}, {"values", P.alphabet()}, {"prob", prob}};
}

Distribution dist_from_json(const SimplexValue& j) {
  const int arity = j.at("arity").get<int>();
  std::vector<std::string> alphabet;
  for (const auto& v : j.at("values"))
    alphabet.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  std::map<std::vector<std::string>, Rat> prob;
  for (const auto& [key, val] : j.at("prob").items())
    prob[split_key(key)] =
        val.is_string() ? parse_rational(val.get<std::string>()) : Rat(val.get<long long>());
  return Distribution(arity, std::move(alphabet), std::move(prob));
}

namespace {

class TableProvider final : public FillerProvider {
 public:
  explicit TableProvider(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}
  std::string name() const override { return "database"; }
  int dimension(const SimplexValue& x) const override { return x.at("arity").get<int>() - 1; }
  SimplexValue face(const SimplexValue& x, const MonotoneMap& coface) const override {
    return table_to_json(table_face(table_from_json(x), coface));
  }
  std::optional<SimplexValue> span_fill(const SimplexValue& x, const SimplexValue& y,
                                        const SpanEmbedding& emb) const override {
    return table_to_json(join(table_from_json(x), table_from_json(y), emb));
  }

 private:
  std::vector<std::string> alphabet_;
};

class MetricProvider final : public FillerProvider {
 public:
  std::string name() const override { return "metric"; }
  int dimension(const SimplexValue& x) const override {
    return static_cast<int>(x.at("dist").size()) - 1;
  }
  SimplexValue face(const SimplexValue& x, const MonotoneMap& coface) const override {
    return metric_to_json(metric_pullback(metric_from_json(x), coface));
  }
  std::optional<SimplexValue> span_fill(const SimplexValue& x, const SimplexValue& y,
                                        const SpanEmbedding& emb) const override {
    return metric_to_json(metric_fill(metric_from_json(x), metric_from_json(y), emb));
  }
};

class DistProvider final : public FillerProvider {
 public:
  explicit DistProvider(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}
  std::string name() const override { return "distribution"; }
  int dimension(const SimplexValue& x) const override { return x.at("arity").get<int>() - 1; }
  SimplexValue face(const SimplexValue& x, const MonotoneMap& coface) const override {
    return dist_to_json(dist_face(dist_from_json(x), coface));
  }
  std::optional<SimplexValue> span_fill(const SimplexValue& x, const SimplexValue& y,
                                        const SpanEmbedding& emb) const override {
    return dist_to_json(dist_fill(dist_from_json(x), dist_from_json(y), emb));
  }

 private:
  std::vector<std::string> alphabet_;
};

}  // namespace

std::unique_ptr<FillerProvider> table_provider(std::vector<std::string> alphabet) {
  return std::make_unique<TableProvider>(std::move(alphabet));
}

std::unique_ptr<FillerProvider> metric_provider() { return std::make_unique<MetricProvider>(); }

std::unique_ptr<FillerProvider> dist_provider(std::vector<std::string> alphabet) {
  return std::make_unique<DistProvider>(std::move(alphabet));
}

}  // namespace deltakit
