#ifndef TOLFAC_BITSET_HPP_
#define TOLFAC_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tolfac {

  // Fixed-length dynamic bitset. Bit i lives in word i / 64 at position
  // i % 64. Ordering is lexicographic on the bit sequence b_0 b_1 ...,
  // with 0 < 1, which is the canonical order used for relations and sets.
  class Bitset {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : _size(nbits), _words((nbits + word_bits - 1) / word_bits, 0) {}

    std::size_t size() const noexcept {
      return _size;
    }

    bool test(std::size_t i) const noexcept {
      return (_words[i / word_bits] >> (i % word_bits)) & 1U;
    }

    void set(std::size_t i) noexcept {
      _words[i / word_bits] |= Word{1} << (i % word_bits);
    }

    void reset(std::size_t i) noexcept {
      _words[i / word_bits] &= ~(Word{1} << (i % word_bits));
    }

    void set_all() noexcept {
      for (auto& w : _words) {
        w = ~Word{0};
      }
      trim();
    }

    void clear() noexcept {
      for (auto& w : _words) {
        w = 0;
      }
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += std::popcount(w);
      }
      return c;
    }

    bool any() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return true;
        }
      }
      return false;
    }

    bool none() const noexcept {
      return !any();
    }

    bool is_subset_of(Bitset const& other) const noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        if ((_words[k] & ~other._words[k]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects(Bitset const& other) const noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        if ((_words[k] & other._words[k]) != 0) {
          return true;
        }
      }
      return false;
    }

    // Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const noexcept {
      if (from >= _size) {
        return _size;
      }
      std::size_t k = from / word_bits;
      Word        w = _words[k] & (~Word{0} << (from % word_bits));
      while (true) {
        if (w != 0) {
          return k * word_bits + std::countr_zero(w);
        }
        if (++k == _words.size()) {
          return _size;
        }
        w = _words[k];
      }
    }

    std::size_t find_first() const noexcept {
      return find_next(0);
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        Word w = _words[k];
        while (w != 0) {
          f(k * word_bits + std::countr_zero(w));
          w &= w - 1;
        }
      }
    }

    std::vector<std::size_t> to_vector() const {
      std::vector<std::size_t> out;
      out.reserve(count());
      for_each([&out](std::size_t i) { out.push_back(i); });
      return out;
    }

    Bitset& operator|=(Bitset const& other) noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        _words[k] |= other._words[k];
      }
      return *this;
    }

    Bitset& operator&=(Bitset const& other) noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        _words[k] &= other._words[k];
      }
      return *this;
    }

    // this &= ~other
    Bitset& subtract(Bitset const& other) noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        _words[k] &= ~other._words[k];
      }
      return *this;
    }

    friend Bitset operator|(Bitset lhs, Bitset const& rhs) {
      lhs |= rhs;
      return lhs;
    }

    friend Bitset operator&(Bitset lhs, Bitset const& rhs) {
      lhs &= rhs;
      return lhs;
    }

    friend bool operator==(Bitset const&, Bitset const&) = default;

    friend bool operator<(Bitset const& lhs, Bitset const& rhs) noexcept {
      return compare_words(lhs._words, rhs._words) < 0;
    }

    std::vector<Word> const& words() const noexcept {
      return _words;
    }

    std::size_t hash() const noexcept {
      std::size_t h = _size;
      for (auto w : _words) {
        h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }

    // Lexicographic comparison of equal-length word vectors as bit
    // sequences starting from bit 0.
    static int compare_words(std::vector<Word> const& a,
                             std::vector<Word> const& b) noexcept {
      std::size_t const m = a.size() < b.size() ? a.size() : b.size();
      for (std::size_t k = 0; k < m; ++k) {
        Word const diff = a[k] ^ b[k];
        if (diff != 0) {
          Word const low = diff & (~diff + 1);
          return (a[k] & low) != 0 ? 1 : -1;
        }
      }
      if (a.size() == b.size()) {
        return 0;
      }
      return a.size() < b.size() ? -1 : 1;
    }

   private:
    void trim() noexcept {
      if (_size % word_bits != 0 && !_words.empty()) {
        _words.back() &= (Word{1} << (_size % word_bits)) - 1;
      }
    }

    std::size_t       _size = 0;
    std::vector<Word> _words;
  };

}  // namespace tolfac

#endif  // TOLFAC_BITSET_HPP_
