/* freeword.cpp
 * ------------
 * Free reduction and bounded triviality search over presented groups.
 */
#include "symun/freeword.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symun {

Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
    return r;
}

Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

long long exponent_sum(const Word& w, int g) {
    long long s = 0;
    for (const Letter& l : w)
        if (g < 0 || l.gen == g) s += l.exp;
    return s;
}

Word cyclic_rotate(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

bool is_relator_consequence_syntactic(const Word& w, const std::vector<Word>& relators) {
    Word rw = free_reduce(w);
    if (rw.empty()) return true;
    for (const Word& rel : relators) {
        Word r = free_reduce(rel);
        if (r.size() != rw.size()) continue;
        for (std::size_t k = 0; k < r.size(); ++k) {
            Word rot = cyclic_rotate(r, k);
            if (rot == rw || word_inverse(rot) == rw) return true;
        }
    }
    return false;
}

namespace {

// Serialize a word so candidate sets can deduplicate across beam levels.
std::string word_key(const Word& w) {
    std::ostringstream os;
    for (const Letter& l : w) os << l.gen << (l.exp > 0 ? '+' : '-');
    return os.str();
}

}  // namespace

TrivialityResult bounded_triviality(const Word& w, const std::vector<Word>& relators,
                                    int depth, int beam) {
    Word start = free_reduce(w);
    if (start.empty()) return {TrivialityStatus::VerifiedFree, 0};
    if (exponent_sum(start) != 0) return {TrivialityStatus::Inconclusive, 0};

    // All freely reduced relator rotations and their inverses.
    std::vector<Word> moves;
    for (const Word& rel : relators) {
        Word r = free_reduce(rel);
        if (r.empty()) continue;
        for (std::size_t k = 0; k < r.size(); ++k) {
            Word rot = cyclic_rotate(r, k);
            moves.push_back(rot);
            moves.push_back(word_inverse(rot));
        }
    }
    if (moves.empty()) return {TrivialityStatus::Inconclusive, 0};

    std::vector<Word> frontier = {start};
    std::set<std::string> seen = {word_key(start)};
    for (int d = 1; d <= depth; ++d) {
        std::vector<Word> next;
        for (const Word& cur : frontier) {
            for (const Word& mv : moves) {
                for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
                    Word cand;
                    cand.reserve(cur.size() + mv.size());
                    cand.insert(cand.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
                    cand.insert(cand.end(), mv.begin(), mv.end());
                    cand.insert(cand.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end());
                    cand = free_reduce(cand);
                    if (cand.empty()) return {TrivialityStatus::VerifiedBounded, d};
                    std::string key = word_key(cand);
                    if (seen.insert(key).second) next.push_back(std::move(cand));
                }
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const Word& a, const Word& b) { return a.size() < b.size(); });
        if (static_cast<int>(next.size()) > beam) next.resize(static_cast<std::size_t>(beam));
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return {TrivialityStatus::Inconclusive, depth};
}

std::string word_to_string(const Word& w, const std::string& symbol) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << symbol << w[i].gen;
        if (w[i].exp < 0) os << "^-1";
    }
    return os.str();
}

}  // namespace symun
