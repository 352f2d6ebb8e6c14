/* freeword.hpp
 * ------------
 * Words in a free group on numbered generators, free reduction, and two
 * checkers used when verifying group homomorphisms:
 *
 *  - is_relator_consequence_syntactic: is w (after free reduction) literally
 *    a cyclic rotation of some relator or relator inverse?
 *  - bounded_triviality: is w trivial in the presented group, certified by a
 *    bounded search that inserts relator conjugates?  Sound but incomplete:
 *    it never certifies a non-trivial word (an abelianization gate rejects
 *    words with nonzero exponent sum up front), and may return Inconclusive.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symun {

// One letter: generator index and exponent +-1.
struct Letter {
    int gen;
    int exp;  // +1 or -1
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
// Cancel adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);
// Sum of exponents of generator g in w; g = -1 sums over all letters.
long long exponent_sum(const Word& w, int g = -1);
Word cyclic_rotate(const Word& w, std::size_t k);

// w freely reduces to a cyclic rotation of some relator or relator inverse?
bool is_relator_consequence_syntactic(const Word& w, const std::vector<Word>& relators);

enum class TrivialityStatus {
    VerifiedFree,     // freely reduces to the empty word
    VerifiedBounded,  // reduced to empty within the search bounds
    Inconclusive,     // bounds exhausted (or abelianization gate failed)
};

struct TrivialityResult {
    TrivialityStatus status;
    int depth_used = 0;  // relator insertions consumed (bounded case)
};

// Beam search: repeatedly insert freely-reduced relator conjugates
// (rotations and inverses, at every position) and keep the `beam` shortest
// candidates per depth, up to `depth` insertions.
TrivialityResult bounded_triviality(const Word& w, const std::vector<Word>& relators,
                                    int depth = 10, int beam = 100000);

std::string word_to_string(const Word& w, const std::string& symbol = "x");

}  // namespace symun
