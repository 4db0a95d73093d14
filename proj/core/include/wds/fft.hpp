#pragma once

#include "wds/types.hpp"

namespace wds {

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

/// X_n = sum_k x_k e^{-2 pi i n k / N}, unnormalized. Thread safe.
cvec fft(const cvec& x);
/// x_k = sum_n X_n e^{+2 pi i n k / N}, unnormalized. Thread safe.
cvec ifft(const cvec& x);

}  // namespace wds
