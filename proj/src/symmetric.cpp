#include "ohl/symmetric.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

namespace ohl {

Permutation make_permutation(std::vector<int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(v) + " outside [n]");
    if (seen[v]) throw Error(ErrorKind::DuplicateEntry, "entry " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  return Permutation{std::move(word)};
}

Permutation identity_permutation(int n) {
  Permutation p;
  p.word.resize(n);
  std::iota(p.word.begin(), p.word.end(), 1);
  return p;
}

Permutation inverse(const Permutation& s) {
  Permutation out;
  out.word.resize(s.word.size());
  for (int i = 0; i < s.size(); ++i) out.word[s.word[i] - 1] = i + 1;
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different sizes");
  Permutation out;
  out.word.resize(b.word.size());
  for (int i = 0; i < b.size(); ++i) out.word[i] = a.word[b.word[i] - 1];
  return out;
}

std::string to_text(const Permutation& s) {
  std::string out = "[";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.word[i]);
  }
  return out + "]";
}

Permutation parse_permutation(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorKind::ParseError, "permutation must look like [3,1,2]");
  std::vector<int> word;
  std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorKind::ParseError, "bad permutation entry '" + item + "'");
      word.push_back(std::stoi(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  try {
    return make_permutation(std::move(word));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Permutation standardize(std::span<const int> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  Permutation out;
  out.word.resize(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[order[r]] == seq[order[r - 1]])
      throw Error(ErrorKind::DuplicateEntry, "standardize needs distinct entries");
    out.word[order[r]] = static_cast<int>(r) + 1;
  }
  return out;
}

Permutation restrict(const Permutation& s, std::span<const int> subset) {
  std::vector<int> values;
  values.reserve(subset.size());
  for (int a : subset) {
    if (a < 1 || a > s.size()) throw Error(ErrorKind::OutOfRange, "restriction index outside [n]");
    values.push_back(s(a));
  }
  return standardize(values);
}

Permutation direct_sum(const Permutation& s, const Permutation& t) {
  Permutation out = s;
  for (int v : t.word) out.word.push_back(v + s.size());
  return out;
}

Permutation alpha(const Permutation& s) {
  Permutation r{std::vector<int>(s.word.rbegin(), s.word.rend())};
  return inverse(r);
}

bool is_connected(const Permutation& s) {
  if (s.size() < 1) throw Error(ErrorKind::OutOfRange, "is_connected needs n >= 1");
  int running_max = 0;
  for (int i = 1; i < s.size(); ++i) {
    running_max = std::max(running_max, s(i));
    if (running_max == i) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.word.begin(), p.word.end()));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_text(const Shuffle& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (i) out += ',';
    out += set_text(s.blocks[i]);
  }
  return out + ")";
}

Permutation shuffle_to_perm(const Shuffle& s) {
  std::vector<int> inv;
  for (const auto& b : s.blocks) inv.insert(inv.end(), b.begin(), b.end());
  return inverse(make_permutation(std::move(inv)));
}

namespace {

void shuffles_rec(std::vector<int> remaining, std::span<const int> sizes, Shuffle& cur,
                  std::vector<Shuffle>& out) {
  if (sizes.empty()) {
    out.push_back(cur);
    return;
  }
  const int k = sizes[0];
  const int m = static_cast<int>(remaining.size());
  // Enumerate k-subsets of `remaining` in lexicographic order.
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> block, rest;
    std::size_t j = 0;
    for (int i = 0; i < m; ++i) {
      if (j < idx.size() && idx[j] == i) {
        block.push_back(remaining[i]);
        ++j;
      } else {
        rest.push_back(remaining[i]);
      }
    }
    cur.blocks.push_back(std::move(block));
    shuffles_rec(std::move(rest), sizes.subspan(1), cur, out);
    cur.blocks.pop_back();
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

std::vector<Shuffle> shuffles(std::span<const int> sizes) {
  int total = 0;
  for (int s : sizes) {
    if (s < 0) throw Error(ErrorKind::OutOfRange, "negative shuffle block size");
    total += s;
  }
  std::vector<int> all(total);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Shuffle> out;
  Shuffle cur;
  shuffles_rec(std::move(all), sizes, cur, out);
  return out;
}

std::vector<Shuffle> shuffles(int p, int q) {
  const int sizes[] = {p, q};
  return shuffles(std::span<const int>(sizes));
}

const std::vector<Permutation>& shuffle_permutations(int p, int q) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({p, q});
  if (it == cache.end()) {
    std::vector<Permutation> perms;
    for (const auto& sh : shuffles(p, q)) perms.push_back(shuffle_to_perm(sh));
    it = cache.emplace(std::pair{p, q}, std::move(perms)).first;
  }
  return it->second;
}

CosetFactors coset_factorize(const Permutation& s, int p) {
  if (p < 0 || p > s.size()) throw Error(ErrorKind::OutOfRange, "split point outside [0,n]");
  std::vector<int> low, high;
  for (int i = 1; i <= s.size(); ++i) (s(i) <= p ? low : high).push_back(i);
  CosetFactors out{restrict(s, low), restrict(s, high), Shuffle{{low, high}}};
  return out;
}

// ---------------------------------------------------------------------------

Permutation as_compose(const Permutation& s, std::span<const Permutation> parts) {
  if (static_cast<int>(parts.size()) != s.size())
    throw Error(ErrorKind::ArityMismatch, "as_compose needs " + std::to_string(s.size()) + " inputs");
  std::vector<int> by_value(s.size() + 1, 0);  // arity of the block substituted for value v
  for (int i = 1; i <= s.size(); ++i) by_value[s(i)] = parts[i - 1].size();
  std::vector<int> shift(s.size() + 2, 0);
  for (int v = 1; v <= s.size(); ++v) shift[v + 1] = shift[v] + by_value[v];
  Permutation out;
  for (int i = 1; i <= s.size(); ++i)
    for (int v : parts[i - 1].word) out.word.push_back(v + shift[s(i)]);
  return out;
}

ComTerm com_hat_product(int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + m), static_cast<unsigned long>(n));
  return ComTerm{Rational(c), n + m};
}

ComTerm com_trivial_product(int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
  return ComTerm{Rational(1), n + m};
}

// ---------------------------------------------------------------------------

PermComb mr_product(const Permutation& s, const Permutation& t) {
  Permutation st = direct_sum(s, t);
  PermComb out;
  for (const auto& xi : shuffle_permutations(s.size(), t.size())) out.add(compose(st, xi), 1);
  return out;
}

PermComb mr_product(const PermComb& a, const PermComb& b) {
  return bilinear_extend([](const Permutation& x, const Permutation& y) { return mr_product(x, y); }, a, b);
}

PermComb concat_product(const Permutation& s, const Permutation& t) { return PermComb(direct_sum(s, t)); }

PermComb concat_product(const PermComb& a, const PermComb& b) {
  return bilinear_extend([](const Permutation& x, const Permutation& y) { return concat_product(x, y); }, a, b);
}

PermTensor mr_bar_coproduct(const Permutation& s) {
  PermTensor out;
  for (int i = 0; i <= s.size(); ++i) {
    std::span<const int> w(s.word);
    out.add({standardize(w.first(i)), standardize(w.subspan(i)), std::nullopt}, 1);
  }
  return out;
}

std::vector<ShuffleTag> subset_splits(int n) {
  std::vector<ShuffleTag> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ShuffleTag t;
    for (int i = 1; i <= n; ++i) ((mask >> (i - 1)) & 1u ? t.first : t.second).push_back(i);
    out.push_back(std::move(t));
  }
  return out;
}

PermTensor mr_hat_coproduct(const Permutation& s) {
  PermTensor out;
  for (const auto& tag : subset_splits(s.size()))
    out.add({restrict(s, tag.first), restrict(s, tag.second), std::nullopt}, 1);
  return out;
}

PermTensor as_twisted_coproduct(const Permutation& s) {
  PermTensor out;
  for (auto& tag : subset_splits(s.size())) {
    Permutation l = restrict(s, tag.first);
    Permutation r = restrict(s, tag.second);
    out.add({std::move(l), std::move(r), std::move(tag)}, 1);
  }
  return out;
}

TensorBasis<Permutation, Permutation> shuffle_tensor_action(
    const TensorBasis<Permutation, Permutation>& t, const Permutation& s) {
  auto right_mult = [](const Permutation& m, const Permutation& g) { return compose(m, g); };
  return shuffle_tensor_action(t, s, right_mult, right_mult);
}

// ---------------------------------------------------------------------------

std::string to_text(const Word& w) { return w.letters.empty() ? "ε" : w.letters; }

Word parse_word(std::string_view text) {
  if (text.empty() || text == "ε") return Word{};
  for (char c : text)
    if (c < 'a' || c > 'z') throw Error(ErrorKind::ParseError, "word letters must be a-z");
  return Word{std::string(text)};
}

WordComb word_shuffle(const Word& a, const Word& b) {
  WordComb out;
  const int p = a.size(), q = b.size();
  for (const auto& sh : shuffles(p, q)) {
    std::string w(p + q, ' ');
    for (int i = 0; i < p; ++i) w[sh.blocks[0][i] - 1] = a.letters[i];
    for (int i = 0; i < q; ++i) w[sh.blocks[1][i] - 1] = b.letters[i];
    out.add(Word{std::move(w)}, 1);
  }
  return out;
}

WordComb word_concat(const Word& a, const Word& b) { return WordComb(Word{a.letters + b.letters}); }

WordTensor word_deconcat(const Word& w) {
  WordTensor out;
  for (int i = 0; i <= w.size(); ++i)
    out.add({Word{w.letters.substr(0, i)}, Word{w.letters.substr(i)}, std::nullopt}, 1);
  return out;
}

WordTensor word_unshuffle(const Word& w) {
  WordTensor out;
  for (const auto& tag : subset_splits(w.size())) {
    std::string l, r;
    for (int i : tag.first) l += w.letters[i - 1];
    for (int i : tag.second) r += w.letters[i - 1];
    out.add({Word{std::move(l)}, Word{std::move(r)}, std::nullopt}, 1);
  }
  return out;
}

std::vector<Word> all_words(int n, int alphabet) {
  std::vector<Word> out{Word{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int c = 0; c < alphabet; ++c) next.push_back(Word{w.letters + static_cast<char>('a' + c)});
    out = std::move(next);
  }
  return out;
}

}  // namespace ohl
