#ifndef CODIFF_GRADED_SPACE_HPP
#define CODIFF_GRADED_SPACE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace codiff {

// A tensor word: 1-based basis indices, empty word allowed.
using Word = std::vector<int>;

// Z2-graded vector space with even basis vectors listed first:
// |v_i| = 0 for i <= even_dim, 1 otherwise.
struct GradedSpace {
    int even_dim = 0;
    int odd_dim = 0;

    int total_dim() const { return even_dim + odd_dim; }

    int parity(int index) const {
        if (index < 1 || index > total_dim()) {
            throw std::out_of_range("basis index out of range");
        }
        return index <= even_dim ? 0 : 1;
    }

    bool valid_word(const Word& w) const {
        for (int i : w) {
            if (i < 1 || i > total_dim()) return false;
        }
        return true;
    }

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.even_dim == b.even_dim && a.odd_dim == b.odd_dim;
    }
    friend bool operator!=(const GradedSpace& a, const GradedSpace& b) { return !(a == b); }
};

// Parity of a word = sum of letter parities mod 2.
int word_parity(const Word& w, const GradedSpace& s);

// All (p+q)^n words of length n in lexicographic order; n = 0 gives { () }.
std::vector<Word> enumerate_words(int n, const GradedSpace& s);

struct SectorDims {
    std::int64_t even = 0;
    std::int64_t odd = 0;
    friend bool operator==(const SectorDims& a, const SectorDims& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

// Dimensions of the even and odd parts of C^n = Hom(W^n, W).
SectorDims cochain_dims(int n, const GradedSpace& s);

}  // namespace codiff

#endif
