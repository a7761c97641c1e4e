#pragma once

namespace cfactors {

// Drops every internal memo table (characters, Littlewood-Richardson counts,
// Schur products, Lie multiplicities). Only needed by benchmarks that want
// cold-cache timings; must not be called while other threads compute.
void clear_computation_caches();

namespace detail {
void clear_character_memo();
void clear_schur_memos();
void clear_lie_memo();
}  // namespace detail

}  // namespace cfactors
