#include "extremal/reedmuller.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace extremal::rm {

namespace {

std::uint64_t mask_of(int length) { return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1; }

int pivot_of(std::uint64_t row) { return 63 - std::countl_zero(row); }

void require_same_length(const Codeword& a, const Codeword& b) {
    if (a.length() != b.length()) throw std::invalid_argument("codeword length mismatch");
}

// Calls f on every word of the given length and weight.
void for_each_of_weight(int length, int weight, const std::function<void(std::uint64_t)>& f) {
    std::function<void(int, int, std::uint64_t)> rec = [&](int start, int left, std::uint64_t acc) {
        if (left == 0) {
            f(acc);
            return;
        }
        for (int p = start; p <= length - left; ++p) rec(p + 1, left - 1, acc | (std::uint64_t{1} << p));
    };
    rec(0, weight, 0);
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Codeword::Codeword(int length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length < 0 || length > 64) throw std::invalid_argument("codeword length must be in [0, 64]");
    if ((bits & ~mask_of(length)) != 0) throw std::invalid_argument("codeword bits exceed length");
}

Codeword Codeword::ones(int length) { return Codeword(length, mask_of(length)); }

Codeword Codeword::parse(std::string_view text) {
    std::uint64_t bits = 0;
    int length = 0;
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch != '0' && ch != '1') throw std::invalid_argument("codeword symbols must be 0 or 1");
        if (++length > 64) throw std::invalid_argument("codeword longer than 64");
        bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    return Codeword(length, bits);
}

Codeword Codeword::concat(std::span<const Codeword> blocks) {
    std::uint64_t bits = 0;
    int length = 0;
    for (const auto& b : blocks) {
        length += b.length();
        if (length > 64) throw std::invalid_argument("codeword longer than 64");
        bits = (b.length() == 64 ? 0 : bits << b.length()) | b.bits();
    }
    return Codeword(length, bits);
}

bool Codeword::get(int i) const {
    if (i < 1 || i > length_) throw std::out_of_range("coordinate out of range");
    return (bits_ >> (length_ - i)) & 1U;
}

void Codeword::set(int i, bool value) {
    if (i < 1 || i > length_) throw std::out_of_range("coordinate out of range");
    const std::uint64_t bit = std::uint64_t{1} << (length_ - i);
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

int Codeword::weight() const { return std::popcount(bits_); }

Codeword Codeword::complement() const { return Codeword(length_, ~bits_ & mask_of(length_)); }

Codeword Codeword::block(int k, int width) const {
    if (width <= 0 || length_ % width != 0 || k < 0 || k >= length_ / width)
        throw std::out_of_range("block out of range");
    const int shift = length_ - width * (k + 1);
    return Codeword(width, (bits_ >> shift) & mask_of(width));
}

std::string Codeword::to_string() const {
    std::string s;
    for (int i = 1; i <= length_; ++i) {
        if (i > 1 && (i - 1) % 4 == 0) s += ' ';
        s += get(i) ? '1' : '0';
    }
    return s;
}

Codeword operator+(const Codeword& a, const Codeword& b) {
    require_same_length(a, b);
    return Codeword(a.length(), a.bits() ^ b.bits());
}

Codeword operator*(const Codeword& a, const Codeword& b) {
    require_same_length(a, b);
    return Codeword(a.length(), a.bits() & b.bits());
}

bool inner(const Codeword& a, const Codeword& b) { return (a * b).weight() % 2 == 1; }

LinearCode::LinearCode(int length, std::span<const Codeword> generators) : length_(length) {
    for (const auto& g : generators) {
        if (g.length() != length) throw std::invalid_argument("generator length mismatch");
        const std::uint64_t r = reduce(g.bits());
        if (r == 0) continue;
        const int p = pivot_of(r);
        for (auto& row : rows_)
            if ((row >> p) & 1U) row ^= r;
        rows_.push_back(r);
        std::sort(rows_.begin(), rows_.end(), std::greater<>());
    }
}

std::uint64_t LinearCode::reduce(std::uint64_t w) const {
    for (std::uint64_t row : rows_)
        if ((w >> pivot_of(row)) & 1U) w ^= row;
    return w;
}

std::vector<Codeword> LinearCode::basis() const {
    std::vector<Codeword> out;
    out.reserve(rows_.size());
    for (std::uint64_t r : rows_) out.emplace_back(length_, r);
    return out;
}

bool LinearCode::contains(const Codeword& w) const {
    if (w.length() != length_) throw std::invalid_argument("codeword length mismatch");
    return reduce(w.bits()) == 0;
}

LinearCode LinearCode::dual() const {
    std::uint64_t pivots = 0;
    for (std::uint64_t r : rows_) pivots |= std::uint64_t{1} << pivot_of(r);
    std::vector<Codeword> gens;
    for (int f = 0; f < length_; ++f) {
        if ((pivots >> f) & 1U) continue;
        std::uint64_t v = std::uint64_t{1} << f;
        for (std::uint64_t r : rows_)
            if ((r >> f) & 1U) v |= std::uint64_t{1} << pivot_of(r);
        gens.emplace_back(length_, v);
    }
    return LinearCode(length_, gens);
}

std::vector<Codeword> LinearCode::codewords() const {
    if (dimension() > kMaxEnumerableDimension) throw std::domain_error("enumeration infeasible");
    const std::uint64_t count = std::uint64_t{1} << dimension();
    std::vector<Codeword> out;
    out.reserve(count);
    // Gray-code walk: one row toggled per step.
    std::uint64_t w = 0;
    out.emplace_back(length_, w);
    for (std::uint64_t i = 1; i < count; ++i) {
        w ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
        out.emplace_back(length_, w);
    }
    return out;
}

WeightEnumerator weight_enumerator(const LinearCode& code) {
    WeightEnumerator e;
    for (const auto& w : code.codewords()) ++e[w.weight()];
    return e;
}

WeightEnumerator coset_weight_enumerator(const Codeword& shift, const LinearCode& code) {
    WeightEnumerator e;
    for (const auto& w : code.codewords()) ++e[(w + shift).weight()];
    return e;
}

LinearCode product_span(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("code length mismatch");
    std::vector<Codeword> gens;
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) gens.push_back(u * v);
    return LinearCode(a.length(), gens);
}

const ReedMullerCodes& rm_codes() {
    static const ReedMullerCodes codes = [] {
        ReedMullerCodes c;
        c.alpha_basis = {
            Codeword::parse("1111 1111 1111 1111"), Codeword::parse("1111 1111 0000 0000"),
            Codeword::parse("1111 0000 1111 0000"), Codeword::parse("1100 1100 1100 1100"),
            Codeword::parse("1010 1010 1010 1010"),
        };
        c.rm14 = LinearCode(16, c.alpha_basis);
        c.rm24 = product_span(c.rm14, c.rm14);
        for (const auto& a : c.alpha_basis) {
            const Codeword four[] = {a, a, a, a};
            c.gamma_basis.push_back(Codeword::concat(four));
        }
        const Codeword z = Codeword::zeros(16);
        const Codeword o = Codeword::ones(16);
        const Codeword g6[] = {z, o, z, o};
        const Codeword g7[] = {z, z, o, o};
        c.gamma_basis.push_back(Codeword::concat(g6));
        c.gamma_basis.push_back(Codeword::concat(g7));
        c.rm16 = LinearCode(64, c.gamma_basis);
        c.rm46 = c.rm16.dual();
        return c;
    }();
    return codes;
}

bool rm46_member(const Codeword& word) {
    if (word.length() != 64) throw std::invalid_argument("rm46_member: word must have length 64");
    const Codeword b0 = word.block(0, 16);
    const Codeword sum = b0 + word.block(1, 16) + word.block(2, 16) + word.block(3, 16);
    if (!rm_codes().rm24.contains(sum)) return false;
    const int parity = b0.weight() % 2;
    for (int k = 1; k < 4; ++k)
        if (word.block(k, 16).weight() % 2 != parity) return false;
    return true;
}

MinWeightReport min_weight_rm46() {
    MinWeightReport r;
    for (int w = 1;; ++w) {
        bool found = false;
        for_each_of_weight(64, w, [&](std::uint64_t bits) {
            if (found) return;
            const Codeword word(64, bits);
            if (rm46_member(word)) {
                found = true;
                r.witness = word;
            } else {
                ++r.words_scanned;
            }
        });
        if (found) {
            r.min_weight = w;
            return r;
        }
    }
}

std::map<int, std::uint64_t> rm46_low_weight_census(int max_weight) {
    std::map<int, std::uint64_t> census;
    for (int w = 0; w <= max_weight; ++w) {
        std::uint64_t n = 0;
        for_each_of_weight(64, w, [&](std::uint64_t bits) { n += rm46_member(Codeword(64, bits)) ? 1 : 0; });
        census[w] = n;
    }
    return census;
}

std::map<int, Integer> macwilliams_dual(const WeightEnumerator& enumerator, int length, int max_weight) {
    Integer size = 0;
    for (const auto& [w, n] : enumerator) size += Integer(static_cast<unsigned long>(n));
    std::map<int, Integer> out;
    for (int k = 0; k <= max_weight; ++k) {
        Integer total = 0;
        for (const auto& [w, n] : enumerator) {
            Integer kraw = 0;
            for (int j = 0; j <= k; ++j) {
                const Integer term = binomial(w, j) * binomial(length - w, k - j);
                kraw += (j % 2 == 0) ? term : Integer(-term);
            }
            total += Integer(static_cast<unsigned long>(n)) * kraw;
        }
        if (total % size != 0) throw std::logic_error("MacWilliams transform is not integral");
        out[k] = total / size;
    }
    return out;
}

SubcodeConditions subcode_conditions(const Codeword& xi) {
    if (xi.length() != 64) throw std::invalid_argument("subcode_conditions: xi must have length 64");
    const ReedMullerCodes& codes = rm_codes();
    const LinearCode rm14_perp = codes.rm14.dual();
    const Codeword nu[4] = {xi.block(0, 16), xi.block(1, 16), xi.block(2, 16), xi.block(3, 16)};

    SubcodeConditions r;
    r.cond_i = codes.rm14.contains(nu[0] + nu[1] + nu[2] + nu[3]);
    r.cond_ii = true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) r.cond_ii = r.cond_ii && rm14_perp.contains(nu[i] + nu[j]);
    r.cond_iii = std::all_of(std::begin(nu), std::end(nu), [](const Codeword& b) { return b.weight() % 2 == 0; });
    r.cond_iv = true;
    for (int i = 0; i < 5; ++i) r.cond_iv = r.cond_iv && (xi * codes.gamma_basis[static_cast<std::size_t>(i)]).weight() % 4 == 0;
    r.cond_iv_67 = (xi * codes.gamma_basis[5]).weight() % 4 == 0 && (xi * codes.gamma_basis[6]).weight() % 4 == 0;

    // Independent route: xi * gamma for every gamma in RM(1,6), tested for
    // orthogonality against RM(1,6) itself.
    r.subcode_ok = true;
    bool doubly_even = true;
    for (const auto& g : codes.rm16.codewords()) {
        const Codeword p = xi * g;
        for (const auto& b : codes.gamma_basis) r.subcode_ok = r.subcode_ok && !inner(p, b);
        doubly_even = doubly_even && p.weight() % 4 == 0;
    }
    r.doubly_even_ok = r.subcode_ok && doubly_even;
    return r;
}

Codeword xi_from_alpha(const Codeword& alpha) {
    const Codeword parts[] = {alpha, alpha, alpha, alpha.complement()};
    return Codeword::concat(parts);
}

WeightSixScan weight_six_scan() {
    const ReedMullerCodes& codes = rm_codes();
    const WeightEnumerator expected = {{28, 64}, {36, 64}};
    WeightSixScan r;
    for (const auto& alpha : codes.rm24.codewords()) {
        if (alpha.weight() != 6) continue;
        ++r.weight6_count;
        const Codeword xi = xi_from_alpha(alpha);
        const SubcodeConditions rec = subcode_conditions(xi);
        if (rec.cond_i && rec.cond_ii && rec.cond_iii && rec.cond_iv && rec.cond_iv_67 && rec.subcode_ok && rec.doubly_even_ok)
            ++r.conditions_pass;
        if (coset_weight_enumerator(xi, codes.rm16) == expected) ++r.enumerator_matches;
    }
    return r;
}

XiCertificate verify_xi_certificate() {
    const ReedMullerCodes& codes = rm_codes();
    XiCertificate cert;
    cert.alpha = Codeword::parse("0110 1100 1010 0000");
    cert.xi = xi_from_alpha(cert.alpha);
    cert.alpha_in_rm24 = codes.rm24.contains(cert.alpha);
    cert.alpha_weight = cert.alpha.weight();
    cert.conditions = subcode_conditions(cert.xi);
    cert.coset_enumerator = coset_weight_enumerator(cert.xi, codes.rm16);
    cert.min_coset_weight = cert.coset_enumerator.begin()->first;
    cert.top_weight = Rational(cert.min_coset_weight, 16);
    return cert;
}

}  // namespace extremal::rm
