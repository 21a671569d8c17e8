// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Seeded random variate generation on counter-based streams.
//
// A stream is identified by (master_seed, stream_id); identical identifiers
// reproduce identical sequences regardless of thread scheduling, and distinct
// stream_ids give statistically independent streams. This is what makes the
// Monte Carlo results byte-stable under any worker count: work is split into
// fixed blocks and the block index is the stream_id.

#pragma once

#include <cstdint>

namespace netgeo {

struct RngStreamSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

// Philox4x64-10 block cipher generator (Salmon et al. multiplier/Weyl
// constants). Key = (master_seed, stream_id); the 128-bit counter indexes
// 256-bit output blocks, so sequences from different keys never overlap.
class Philox4x64 {
 public:
  Philox4x64(std::uint64_t master_seed, std::uint64_t stream_id)
      : key0_(master_seed), key1_(stream_id) {
    refill();
  }

  std::uint64_t next_u64() {
    if (idx_ == 4) {
      if (++ctr0_ == 0) ++ctr1_;
      refill();
    }
    return out_[idx_++];
  }

 private:
  void refill();

  std::uint64_t key0_, key1_;
  std::uint64_t ctr0_ = 0, ctr1_ = 0;
  std::uint64_t out_[4];
  int idx_ = 0;
};

// Distribution layer over a Philox stream. All samplers are exact (no series
// truncation): Marsaglia-Tsang for gamma, polar method for normals, inversion
// or PTRS transformed rejection for Poisson.
class RngStream {
 public:
  explicit RngStream(const RngStreamSpec& spec)
      : RngStream(spec.master_seed, spec.stream_id) {}
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : gen_(master_seed, stream_id) {}

  std::uint64_t next_u64() { return gen_.next_u64(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_.next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  double normal();                            // standard normal
  double exponential();                       // mean 1
  double gamma(double shape, double scale);   // mean shape*scale
  long poisson(double mean);

 private:
  Philox4x64 gen_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// Van der Corput radical inverse; bases (2, 3, 5) give the 3-D Halton
// sequence used for quasi-random expectation over (R0, phi, Rd).
double radical_inverse(std::uint64_t index, std::uint32_t base);

}  // namespace netgeo
