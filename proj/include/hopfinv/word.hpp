#ifndef HOPFINV_WORD_HPP
#define HOPFINV_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hopfinv {

using GenIndex = std::uint32_t; // 1-based generator index

/// A monomial of the free monoid: a finite sequence of generator indices.
/// The empty word is the monoid identity. Words are ordered by length first,
/// then lexicographically on the index sequence.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<GenIndex> indices) : indices_(std::move(indices)) {}

    static Word single(GenIndex i) { return Word(std::vector<GenIndex>{i}); }
    static Word repeated(GenIndex i, std::size_t count);

    std::size_t length() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    GenIndex operator[](std::size_t pos) const { return indices_[pos]; }
    const std::vector<GenIndex>& indices() const { return indices_; }

    Word concat(const Word& rhs) const;
    Word prefix(std::size_t len) const;
    Word suffix_from(std::size_t pos) const;
    bool starts_with(const Word& w) const;

    /// Largest index occurring in the word; 0 for the empty word.
    GenIndex max_index() const;
    std::uint64_t index_sum() const;

    bool operator==(const Word& rhs) const { return indices_ == rhs.indices_; }
    bool operator!=(const Word& rhs) const { return !(*this == rhs); }
    bool operator<(const Word& rhs) const;

    std::string to_string() const; // "x1*x2*x2"; empty word renders as "1"

  private:
    std::vector<GenIndex> indices_;
};

/// All words of the given length over indices 1..rank, in lexicographic order.
/// The caller is responsible for keeping rank^n within its size budget.
std::vector<Word> words_of_degree(std::uint32_t rank, std::size_t n);

} // namespace hopfinv

#endif
