// SPDX-License-Identifier: Apache-2.0

//! Criterion benchmarks for `bfc-core`; see `benches/`.
