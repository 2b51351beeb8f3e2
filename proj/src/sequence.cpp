#include "carpets/sequence.hpp"

#include "carpets/errors.hpp"

namespace carpets {

namespace {
constexpr int kMaxExpansion = 100000;
}

Word repeat_word(const Word &w, int n) {
  Word out;
  out.letters.reserve(std::size_t(w.size()) * std::size_t(n));
  for (int k = 0; k < n; ++k)
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

SequenceSpec SequenceSpec::periodic(Word preperiod, Word period) {
  if (period.empty())
    throw ValidationError("periodic sequence needs a nonempty period");
  SequenceSpec s;
  s.preperiod = std::move(preperiod);
  s.period = std::move(period);
  return s;
}

SequenceSpec SequenceSpec::block_program(const std::vector<Block> &blocks) {
  if (blocks.empty() || !blocks.back().tail)
    throw ValidationError("block program must end with an infinite-tail block");
  Word pre;
  for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
    const Block &b = blocks[k];
    if (b.tail)
      throw ValidationError("only the last block may be an infinite tail");
    if (b.repeat < 0 || b.word.empty())
      throw ValidationError("malformed block");
    if (pre.size() + b.word.size() * b.repeat > kMaxExpansion)
      throw TooLarge("block program expansion exceeds the window budget");
    pre = pre + repeat_word(b.word, b.repeat);
  }
  if (blocks.back().word.empty())
    throw ValidationError("malformed tail block");
  return periodic(std::move(pre), blocks.back().word);
}

SequenceSpec SequenceSpec::constant(int letter) {
  return periodic(Word{}, Word{{letter}});
}

int SequenceSpec::letter(long long n) const {
  if (n < preperiod.size())
    return preperiod[int(n)];
  return period[int((n - preperiod.size()) % period.size())];
}

Word SequenceSpec::prefix(int n) const {
  Word w;
  w.letters.reserve(std::size_t(n));
  for (int k = 0; k < n; ++k)
    w.letters.push_back(letter(k));
  return w;
}

std::vector<double> SequenceSpec::frequencies(int alphabet_size) const {
  std::vector<double> f(std::size_t(alphabet_size), 0.0);
  for (int l : period.letters)
    f[std::size_t(l)] += 1.0 / double(period.size());
  return f;
}

void validate_letters(const SequenceSpec &spec, const DiagonalIFS &ifs) {
  auto check = [&](const Word &w) {
    for (int l : w.letters)
      if (l < 0 || l >= ifs.size())
        throw ValidationError("sequence letter outside the alphabet");
  };
  check(spec.preperiod);
  check(spec.period);
}

} // namespace carpets
