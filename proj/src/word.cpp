#include "hopfinv/word.hpp"

#include <algorithm>

namespace hopfinv {

Word Word::repeated(GenIndex i, std::size_t count) {
    return Word(std::vector<GenIndex>(count, i));
}

Word Word::concat(const Word& rhs) const {
    std::vector<GenIndex> out;
    out.reserve(indices_.size() + rhs.indices_.size());
    out.insert(out.end(), indices_.begin(), indices_.end());
    out.insert(out.end(), rhs.indices_.begin(), rhs.indices_.end());
    return Word(std::move(out));
}

Word Word::prefix(std::size_t len) const {
    return Word(std::vector<GenIndex>(indices_.begin(), indices_.begin() + len));
}

Word Word::suffix_from(std::size_t pos) const {
    return Word(std::vector<GenIndex>(indices_.begin() + pos, indices_.end()));
}

bool Word::starts_with(const Word& w) const {
    if (w.length() > length())
        return false;
    return std::equal(w.indices_.begin(), w.indices_.end(), indices_.begin());
}

GenIndex Word::max_index() const {
    GenIndex m = 0;
    for (GenIndex i : indices_)
        m = std::max(m, i);
    return m;
}

std::uint64_t Word::index_sum() const {
    std::uint64_t s = 0;
    for (GenIndex i : indices_)
        s += i;
    return s;
}

bool Word::operator<(const Word& rhs) const {
    if (indices_.size() != rhs.indices_.size())
        return indices_.size() < rhs.indices_.size();
    return indices_ < rhs.indices_;
}

std::string Word::to_string() const {
    if (indices_.empty())
        return "1";
    std::string out;
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k > 0)
            out += '*';
        out += 'x';
        out += std::to_string(indices_[k]);
    }
    return out;
}

std::vector<Word> words_of_degree(std::uint32_t rank, std::size_t n) {
    std::vector<Word> out;
    if (rank == 0)
        return out;
    std::vector<GenIndex> current(n, 1);
    while (true) {
        out.emplace_back(current);
        // next word in lex order: increment from the right
        std::size_t pos = n;
        while (pos > 0 && current[pos - 1] == rank) {
            current[pos - 1] = 1;
            --pos;
        }
        if (pos == 0)
            break;
        ++current[pos - 1];
    }
    return out;
}

} // namespace hopfinv
