#pragma once

#include <compare>
#include <vector>

#include "ficat/matrix.hpp"
#include "ficat/vic.hpp"

namespace ficat {

// Letters are opaque integer tuples compared for equality only.
using Letter = std::vector<int>;
using Word = std::vector<Letter>;

enum class WordVariant { Higman, Tilde };

/**
 * Higman: a embeds in b as a subsequence of equal letters.
 * Tilde: additionally every letter of b equals a letter matched at or before
 * its position. Both are decided by greedy leftmost matching.
 */
bool word_leq(WordVariant variant, const Word& a, const Word& b);

// ---------------------------------------------------------------- OVIC

// Key of a local OVIC morphism: position i carries (spade, spade) when
// i is in S_c(fp), else (row i of f, column i of fp).
Word ovic_key(const Mat& f, const Mat& fp);
// One key per local factor.
std::vector<Word> ovic_keys(const VicCategory& cat, const Morphism& mor);

// f ≼ g: tilde embedding of the keys on every local factor.
bool ovic_preceq(const VicCategory& cat, const Morphism& f, const Morphism& g);
// Oracle: breadth-first search over single insertion steps on every local
// factor. A step copies column k of fp (k not in S_c) to position l with
// k <= l; `allow_append` admits l equal to the current rank (a new last column).
bool ovic_preceq_bfs(const VicCategory& cat, const Morphism& f, const Morphism& g, bool allow_append = true);

// Total order: rank, then per local factor S_c, columns of fp, free rows of f.
std::strong_ordering ovic_total_cmp(const VicCategory& cat, const Morphism& f, const Morphism& g);

struct InsertionMap {
  Mat phi;   // (n+1) x n
  Mat phip;  // n x (n+1)
};
// Local ring, 0-based: fp * phip inserts v (placed at rows S) as column l;
// phi has its free row at l with a 1 in position k. Needs k <= l <= n, k < n,
// and v_i non-invertible whenever S_i >= l.
InsertionMap ovic_insertion(const RingPtr& r, int n, int k, int l, const std::vector<int>& s, const std::vector<Elem>& v);
// An OVIC morphism phi: n -> n' with g = phi ∘ f, for f ≼ g.
Morphism ovic_phi_for(const VicCategory& cat, const Morphism& f, const Morphism& g);

// ---------------------------------------------------------------- OSI

// Key of a local row-adapted map: theta_i = (r_{2i-1}, r_{2i}) with rows in
// S_r replaced by a spade.
Word osi_key(const Mat& f);
std::vector<Word> osi_keys(const Mat& f);
// f ≼ g: Higman embedding of the keys on every local factor, i.e. f arises
// from g by deleting row pairs that avoid S_r(g).
bool osi_preceq(const Mat& f, const Mat& g);
// Oracle: exhaustive search over deletable pair subsets.
bool osi_preceq_deletion(const Mat& f, const Mat& g);
// Total order: rank, then per local factor S_r, then rows.
std::strong_ordering osi_total_cmp(const Mat& f, const Mat& g);
// phi in OSI(2n -> 2n') with g = phi f, checked symplectic and row-adapted.
Mat osi_insertion_phi(const Mat& f, const Mat& g);

}  // namespace ficat
