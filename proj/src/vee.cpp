#include "deltakit/vee.hpp"

#include <numeric>

namespace deltakit {

std::vector<int> VeeDecomposition::components() const {
  const int r = base.dom();
  const int n = base.cod();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(r) + 2);
  out.push_back(base(0));
  for (int i = 1; i <= r; ++i) out.push_back(base(i) - base(i - 1));
  out.push_back(n - base(r));
  return out;
}

int VeeDecomposition::offset(int i) const {
  if (i < 0 || i >= pieces()) throw std::out_of_range("VeeDecomposition::offset");
  return i == 0 ? 0 : base(i - 1);
}

VeeDecomposition pushforward(const VeeDecomposition& dec, const MonotoneMap& f) {
  if (f.dom() != dec.base.cod())
    throw std::invalid_argument("pushforward: map domain does not match decomposition total");
  return VeeDecomposition(compose(f, dec.base));
}

VeeFamily::VeeFamily(std::vector<MonotoneMap> parts_) : parts(std::move(parts_)) {
  if (parts.empty()) throw std::invalid_argument("VeeFamily: parts must be nonempty");
}

MonotoneMap vee_product(const VeeFamily& family) {
  const int r2 = family.size();
  for (int i = 0; i < r2; ++i) {
    const MonotoneMap& part = family.parts[static_cast<size_t>(i)];
    if (i < r2 - 1 && !preserves_max(part))
      throw EndpointViolation("vee_product: part " + std::to_string(i) + " = " + part.str() +
                                  " does not preserve the maximum element",
                              i, true);
    if (i > 0 && !preserves_min(part))
      throw EndpointViolation("vee_product: part " + std::to_string(i) + " = " + part.str() +
                                  " does not preserve the minimum element",
                              i, false);
  }
  int dom_total = 0, cod_total = 0;
  for (const auto& part : family.parts) {
    dom_total += part.dom();
    cod_total += part.cod();
  }
  std::vector<int> values(static_cast<size_t>(dom_total) + 1, 0);
  int dom_off = 0, cod_off = 0;
  for (const auto& part : family.parts) {
    for (int t = 0; t <= part.dom(); ++t)
      values[static_cast<size_t>(dom_off + t)] = cod_off + part(t);
    dom_off += part.dom();
    cod_off += part.cod();
  }
  return MonotoneMap(dom_total, cod_total, std::move(values));
}

MonotoneMap vee_product(const MonotoneMap& a, const MonotoneMap& b) {
  return vee_product(VeeFamily({a, b}));
}

VeeFamily components_of_map(const MonotoneMap& f, const VeeDecomposition& dec) {
  if (dec.base.cod() != f.dom())
    throw std::invalid_argument("components_of_map: decomposition is not on the domain of f");
  const VeeDecomposition pushed = pushforward(dec, f);
  const auto dom_sizes = dec.components();
  std::vector<MonotoneMap> parts;
  parts.reserve(dom_sizes.size());
  for (int i = 0; i < dec.pieces(); ++i) {
    const int a = dec.offset(i);
    const int c = pushed.offset(i);
    const int size = dom_sizes[static_cast<size_t>(i)];
    const int cod_size = pushed.components()[static_cast<size_t>(i)];
    std::vector<int> vals(static_cast<size_t>(size) + 1);
    for (int t = 0; t <= size; ++t) vals[static_cast<size_t>(t)] = f(a + t) - c;
    parts.emplace_back(size, cod_size, std::move(vals));
  }
  return VeeFamily(std::move(parts));
}

std::vector<Span> decompose_span(const Span& s, const VeeDecomposition& dec) {
  const VeeFamily fs = components_of_map(s.f, dec);
  const VeeFamily gs = components_of_map(s.g, dec);
  std::vector<Span> out;
  out.reserve(fs.parts.size());
  for (size_t i = 0; i < fs.parts.size(); ++i) out.emplace_back(fs.parts[i], gs.parts[i]);
  return out;
}

std::vector<Square> decompose_square(const Square& q, const VeeDecomposition& dec) {
  const VeeFamily fs = components_of_map(q.f, dec);
  const VeeFamily gs = components_of_map(q.g, dec);
  const VeeFamily hs = components_of_map(q.h, pushforward(dec, q.f));
  const VeeFamily ks = components_of_map(q.k, pushforward(dec, q.g));
  std::vector<Square> out;
  out.reserve(fs.parts.size());
  for (size_t i = 0; i < fs.parts.size(); ++i)
    out.emplace_back(fs.parts[i], gs.parts[i], hs.parts[i], ks.parts[i]);
  return out;
}

Span vee_product_spans(const std::vector<Span>& spans) {
  if (spans.empty()) throw std::invalid_argument("vee_product_spans: empty family");
  std::vector<MonotoneMap> fs, gs;
  fs.reserve(spans.size());
  gs.reserve(spans.size());
  for (const auto& s : spans) {
    fs.push_back(s.f);
    gs.push_back(s.g);
  }
  return Span(vee_product(VeeFamily(std::move(fs))), vee_product(VeeFamily(std::move(gs))));
}

Square vee_product_squares(const std::vector<Square>& squares) {
  if (squares.empty()) throw std::invalid_argument("vee_product_squares: empty family");
  std::vector<MonotoneMap> fs, gs, hs, ks;
  for (const auto& q : squares) {
    fs.push_back(q.f);
    gs.push_back(q.g);
    hs.push_back(q.h);
    ks.push_back(q.k);
  }
  return Square(vee_product(VeeFamily(std::move(fs))), vee_product(VeeFamily(std::move(gs))),
                vee_product(VeeFamily(std::move(hs))), vee_product(VeeFamily(std::move(ks))));
}

}  // namespace deltakit
