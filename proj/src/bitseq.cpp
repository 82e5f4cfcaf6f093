#include "seqcube/bitseq.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace seqcube {

namespace {

std::size_t word_count(int n) {
    const std::uint64_t period = std::uint64_t{1} << n;
    return static_cast<std::size_t>((period + 63) / 64);
}

void check_exponent(int n) {
    if (n < 0 || n > PeriodicSequence::kMaxExponent)
        throw DomainError("period exponent out of range [0, 30]: " + std::to_string(n));
}

// Mask selecting the live bits of the top word (all-ones when the period is word-aligned).
std::uint64_t top_mask(int n) {
    const std::uint64_t period = std::uint64_t{1} << n;
    const int rem = static_cast<int>(period % 64);
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

void check_parse_exponent(int n) {
    if (n < 1 || n > PeriodicSequence::kMaxExponent)
        throw ParseError("period exponent must be in [1, 30], got " + std::to_string(n));
}

}  // namespace

PeriodicSequence::PeriodicSequence(int n) : n_(n) {
    check_exponent(n);
    words_.assign(word_count(n), 0);
}

PeriodicSequence PeriodicSequence::from_word(int n, std::uint64_t bits) {
    check_exponent(n);
    if (n > 6) throw DomainError("from_word requires period <= 64 bits");
    PeriodicSequence s(n);
    s.words_[0] = bits & top_mask(n);
    return s;
}

bool PeriodicSequence::bit(std::uint64_t i) const {
    if (i >= period()) throw DomainError("bit index out of range");
    return (words_[i / 64] >> (i % 64)) & 1;
}

void PeriodicSequence::set_bit(std::uint64_t i, bool value) {
    if (i >= period()) throw DomainError("bit index out of range");
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= m;
    else
        words_[i / 64] &= ~m;
}

void PeriodicSequence::flip_bit(std::uint64_t i) {
    if (i >= period()) throw DomainError("bit index out of range");
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

std::uint64_t PeriodicSequence::weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
    return w;
}

bool PeriodicSequence::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t PeriodicSequence::as_word() const {
    if (n_ > 6) throw DomainError("as_word requires period <= 64 bits");
    return words_[0];
}

PeriodicSequence operator^(const PeriodicSequence& s, const PeriodicSequence& t) {
    if (s.exponent() != t.exponent())
        throw DomainError("xor requires equal period exponents (" +
                          std::to_string(s.exponent()) + " vs " + std::to_string(t.exponent()) +
                          ")");
    PeriodicSequence out = s;
    auto& w = out.mutable_words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= t.words()[i];
    return out;
}

std::pair<PeriodicSequence, PeriodicSequence> halves(const PeriodicSequence& s) {
    const int n = s.exponent();
    if (n == 0) throw DomainError("cannot halve a period-1 sequence");
    PeriodicSequence left(n - 1);
    PeriodicSequence right(n - 1);
    const std::uint64_t half = s.period() / 2;
    if (half >= 64) {
        const std::size_t hw = static_cast<std::size_t>(half / 64);
        std::copy_n(s.words().begin(), hw, left.mutable_words().begin());
        std::copy_n(s.words().begin() + hw, hw, right.mutable_words().begin());
    } else {
        const std::uint64_t mask = (std::uint64_t{1} << half) - 1;
        left.mutable_words()[0] = s.words()[0] & mask;
        right.mutable_words()[0] = (s.words()[0] >> half) & mask;
    }
    return {std::move(left), std::move(right)};
}

PeriodicSequence concat_halves(const PeriodicSequence& left, const PeriodicSequence& right) {
    if (left.exponent() != right.exponent())
        throw DomainError("halves must share a period exponent");
    const int n = left.exponent();
    if (n >= PeriodicSequence::kMaxExponent)
        throw DomainError("concatenation would exceed the period cap");
    PeriodicSequence out(n + 1);
    const std::uint64_t half = left.period();
    if (half >= 64) {
        const std::size_t hw = static_cast<std::size_t>(half / 64);
        std::copy_n(left.words().begin(), hw, out.mutable_words().begin());
        std::copy_n(right.words().begin(), hw, out.mutable_words().begin() + hw);
    } else {
        out.mutable_words()[0] = left.words()[0] | (right.words()[0] << half);
    }
    return out;
}

SupportSet SupportSet::of(int n, std::vector<std::uint64_t> positions) {
    check_exponent(n);
    std::sort(positions.begin(), positions.end());
    const std::uint64_t period = std::uint64_t{1} << n;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= period)
            throw DomainError("position " + std::to_string(positions[i]) + " >= period " +
                              std::to_string(period));
        if (i > 0 && positions[i] == positions[i - 1])
            throw DomainError("duplicate position " + std::to_string(positions[i]));
    }
    return SupportSet{n, std::move(positions)};
}

SupportSet support_of(const PeriodicSequence& s) {
    SupportSet p;
    p.n = s.exponent();
    for (std::uint64_t i = 0; i < s.period(); ++i)
        if (s.bit(i)) p.positions.push_back(i);
    return p;
}

PeriodicSequence materialize_support(const SupportSet& p) {
    PeriodicSequence s(p.n);
    for (std::uint64_t pos : p.positions) s.set_bit(pos, true);
    return s;
}

PeriodicSequence parse_sequence(std::string_view text, SequenceFormat format, int n) {
    check_parse_exponent(n);
    const std::uint64_t period = std::uint64_t{1} << n;
    switch (format) {
        case SequenceFormat::bits: {
            if (text.size() != period)
                throw ParseError("bits string has length " + std::to_string(text.size()) +
                                 ", period is " + std::to_string(period));
            PeriodicSequence s(n);
            for (std::uint64_t i = 0; i < period; ++i) {
                const char c = text[static_cast<std::size_t>(i)];
                if (c != '0' && c != '1')
                    throw ParseError(std::string("bad bit character '") + c + "'");
                if (c == '1') s.set_bit(i, true);
            }
            return s;
        }
        case SequenceFormat::hex: {
            if (n < 2) throw ParseError("hex format requires n >= 2");
            if (text.size() != period / 4)
                throw ParseError("hex string has length " + std::to_string(text.size()) +
                                 ", expected " + std::to_string(period / 4));
            PeriodicSequence s(n);
            for (std::size_t t = 0; t < text.size(); ++t) {
                const int v = hex_digit(text[t]);
                if (v < 0) throw ParseError(std::string("bad hex character '") + text[t] + "'");
                for (int r = 0; r < 4; ++r)
                    if ((v >> (3 - r)) & 1) s.set_bit(4 * t + r, true);
            }
            return s;
        }
        case SequenceFormat::positions: {
            std::vector<std::uint64_t> positions;
            std::size_t i = 0;
            while (i < text.size()) {
                std::size_t j = text.find(',', i);
                if (j == std::string_view::npos) j = text.size();
                std::string_view tok = text.substr(i, j - i);
                if (tok.empty()) throw ParseError("empty entry in position list");
                std::uint64_t value = 0;
                for (char c : tok) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw ParseError(std::string("bad position character '") + c + "'");
                    value = value * 10 + static_cast<std::uint64_t>(c - '0');
                    if (value > (std::uint64_t{1} << PeriodicSequence::kMaxExponent))
                        throw ParseError("position out of range: " + std::string(tok));
                }
                positions.push_back(value);
                i = j + 1;
                if (j == text.size()) break;
                if (i == text.size()) throw ParseError("trailing comma in position list");
            }
            try {
                return materialize_support(SupportSet::of(n, std::move(positions)));
            } catch (const DomainError& e) {
                throw ParseError(e.what());
            }
        }
    }
    throw ParseError("unknown sequence format");
}

std::string to_bits_string(const PeriodicSequence& s) {
    std::string out(static_cast<std::size_t>(s.period()), '0');
    for (std::uint64_t i = 0; i < s.period(); ++i)
        if (s.bit(i)) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

std::string to_hex_string(const PeriodicSequence& s) {
    if (s.exponent() < 2) throw DomainError("hex format requires n >= 2");
    static const char* digits = "0123456789ABCDEF";
    std::string out(static_cast<std::size_t>(s.period() / 4), '0');
    for (std::size_t t = 0; t < out.size(); ++t) {
        int v = 0;
        for (int r = 0; r < 4; ++r)
            if (s.bit(4 * t + r)) v |= 1 << (3 - r);
        out[t] = digits[v];
    }
    return out;
}

std::string to_positions_string(const PeriodicSequence& s) {
    std::string out;
    for (std::uint64_t i = 0; i < s.period(); ++i) {
        if (!s.bit(i)) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

}  // namespace seqcube
