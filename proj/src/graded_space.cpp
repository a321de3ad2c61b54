#include "codiff/graded_space.hpp"

namespace codiff {

int word_parity(const Word& w, const GradedSpace& s) {
    int p = 0;
    for (int i : w) p ^= s.parity(i);
    return p;
}

std::vector<Word> enumerate_words(int n, const GradedSpace& s) {
    if (n < 0) throw std::invalid_argument("word length must be nonnegative");
    const int m = s.total_dim();
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
        out.push_back(w);
        int pos = n - 1;
        while (pos >= 0 && w[pos] == m) {
            w[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

SectorDims cochain_dims(int n, const GradedSpace& s) {
    if (n < 0) throw std::invalid_argument("cochain degree must be nonnegative");
    // words of length n split by parity: with p even and q odd letters,
    // #even - #odd = (p-q)^n while the total is (p+q)^n
    std::int64_t total = 1;
    std::int64_t diff = 1;
    for (int i = 0; i < n; ++i) {
        total *= s.even_dim + s.odd_dim;
        diff *= s.even_dim - s.odd_dim;
    }
    const std::int64_t even_words = (total + diff) / 2;
    const std::int64_t odd_words = (total - diff) / 2;
    return SectorDims{even_words * s.even_dim + odd_words * s.odd_dim,
                      even_words * s.odd_dim + odd_words * s.even_dim};
}

}  // namespace codiff
