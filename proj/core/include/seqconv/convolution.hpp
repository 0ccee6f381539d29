#pragma once
// convolution.hpp - Exact linear convolution of integer sequences.
//
// Two independent algorithms are kept on purpose: every constant in this
// library flows through this kernel, so the divide-and-conquer path is
// cross-checked coefficient-for-coefficient against the schoolbook one.

#include "seqconv/sequence.hpp"

namespace seqconv {

struct ConvResult {
  Seq seq;  // family = convolved, length |a| + |b| - 1
  Provenance operand_a;
  Provenance operand_b;
};

// y[n] = sum_k a[k] * b[n+1-k], 1-based output indices 1 .. L+M-1.
// Schoolbook O(L*M) exact accumulation.
ConvResult conv(const Seq& a, const Seq& b);

// Karatsuba-style polynomial multiplication; coefficient-identical to conv.
ConvResult conv_fast(const Seq& a, const Seq& b);

// conv(a, a); length 2L-1.
ConvResult self_conv(const Seq& a);

}  // namespace seqconv
