#pragma once

#include <vector>

#include "carpets/carpet.hpp"

namespace carpets {

// Finite word over the alphabet {0, …, N−1}.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
  int size() const { return int(letters.size()); }
  bool empty() const { return letters.empty(); }
  int operator[](int k) const { return letters[k]; }

  friend Word operator+(const Word &u, const Word &v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
  }
  friend bool operator==(const Word &u, const Word &v) { return u.letters == v.letters; }
};

// Repeat a word n times.
Word repeat_word(const Word &w, int n);

// One block of a block-concatenation program: a word repeated `repeat`
// times, or indefinitely when `tail` is set (only legal for the last block).
struct Block {
  Word word;
  int repeat = 1;
  bool tail = false;
};

// A finitely-described infinite word γ. Both input shapes (eventually
// periodic, block program) canonicalize to preperiod + period, which keeps
// window enumeration and Ω-classification on a single code path.
struct SequenceSpec {
  Word preperiod;
  Word period; // nonempty

  static SequenceSpec periodic(Word preperiod, Word period);
  static SequenceSpec block_program(const std::vector<Block> &blocks);
  static SequenceSpec constant(int letter);

  // Letter at 0-based position n.
  int letter(long long n) const;
  Word prefix(int n) const;
  // Limiting letter frequencies (over the period), indexed by letter value.
  std::vector<double> frequencies(int alphabet_size) const;
};

void validate_letters(const SequenceSpec &spec, const DiagonalIFS &ifs);

} // namespace carpets
