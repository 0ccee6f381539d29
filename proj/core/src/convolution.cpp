#include "seqconv/convolution.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace seqconv {

namespace {

using Coeffs = std::vector<BigInt>;
using View = std::span<const BigInt>;

Coeffs school_mul(View a, View b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

constexpr std::size_t kKaratsubaThreshold = 32;

void add_into(Coeffs& acc, const Coeffs& part, std::size_t offset) {
  if (acc.size() < offset + part.size()) acc.resize(offset + part.size());
  for (std::size_t i = 0; i < part.size(); ++i) acc[offset + i] += part[i];
}

Coeffs pointwise_sum(View lo, View hi) {
  Coeffs out(std::max(lo.size(), hi.size()));
  for (std::size_t i = 0; i < lo.size(); ++i) out[i] += lo[i];
  for (std::size_t i = 0; i < hi.size(); ++i) out[i] += hi[i];
  return out;
}

Coeffs karatsuba_mul(View a, View b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) return school_mul(a, b);

  const std::size_t half = (std::max(a.size(), b.size()) + 1) / 2;
  View a_lo = a.subspan(0, std::min(half, a.size()));
  View a_hi = a.size() > half ? a.subspan(half) : View{};
  View b_lo = b.subspan(0, std::min(half, b.size()));
  View b_hi = b.size() > half ? b.subspan(half) : View{};

  Coeffs low = karatsuba_mul(a_lo, b_lo);
  Coeffs high = karatsuba_mul(a_hi, b_hi);
  Coeffs a_sum = pointwise_sum(a_lo, a_hi);
  Coeffs b_sum = pointwise_sum(b_lo, b_hi);
  Coeffs mid = karatsuba_mul(a_sum, b_sum);
  for (std::size_t i = 0; i < low.size(); ++i) mid[i] -= low[i];
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] -= high[i];

  Coeffs out(a.size() + b.size() - 1);
  add_into(out, low, 0);
  add_into(out, mid, half);
  add_into(out, high, 2 * half);
  out.resize(a.size() + b.size() - 1);
  return out;
}

ConvResult make_result(Coeffs coeffs, const Seq& a, const Seq& b) {
  Provenance prov;
  prov.family = SeqFamily::convolved;
  prov.transform_chain.push_back("convolved");
  return ConvResult{Seq(std::move(coeffs), std::move(prov)), a.provenance(), b.provenance()};
}

}  // namespace

ConvResult conv(const Seq& a, const Seq& b) {
  return make_result(school_mul(a.values(), b.values()), a, b);
}

ConvResult conv_fast(const Seq& a, const Seq& b) {
  return make_result(karatsuba_mul(a.values(), b.values()), a, b);
}

ConvResult self_conv(const Seq& a) { return conv(a, a); }

}  // namespace seqconv
