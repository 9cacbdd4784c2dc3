#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringsum {

using u64 = std::uint64_t;

// Thrown on malformed or semantically invalid ring-spec strings.
// `pos` is the byte offset into the input where the problem was detected.
class spec_error : public std::runtime_error {
public:
    spec_error(const std::string& msg, std::size_t pos = 0)
        : std::runtime_error(msg), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Thrown when an operation would enumerate more elements than the cap allows.
class cap_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the closed-form dispatcher cannot certify a spec shape.
class no_closed_form_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixed-ring operands, invalid elements, unsupported ring kinds.
class ring_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RingKind { Zmod, GF, GR, Mat, UT, Nil, Prod };

// Parse tree of the ring constructor grammar:
//   spec := "Zmod(" int ")" | "GF(" int ")" | "GR(" int "," int "," int ")"
//         | "Mat(" int "," spec ")" | "UT(" int "," spec ")"
//         | "Nil(" spec "," int ")" | "Prod(" spec { "," spec } ")"
struct RingSpec {
    RingKind kind = RingKind::Zmod;
    u64 n = 0;  // Zmod modulus / GF order q / GR prime p
    u64 m = 0;  // GR precision
    u64 e = 0;  // GR residue degree
    u64 d = 0;  // Mat/UT dimension, Nil nilpotence class
    std::vector<RingSpec> inner;

    bool operator==(const RingSpec&) const = default;

    std::string str() const;
};

RingSpec zmod_spec(u64 n);
RingSpec gf_spec(u64 q);
RingSpec gr_spec(u64 p, u64 m, u64 e);
RingSpec mat_spec(u64 d, RingSpec inner);
RingSpec ut_spec(u64 d, RingSpec inner);
RingSpec nil_spec(RingSpec inner, u64 k);
RingSpec prod_spec(std::vector<RingSpec> factors);

// Total on the grammar above; everything else raises spec_error with a
// position and the violated constraint.
RingSpec parse_ring_spec(std::string_view text);

// Checks the numeric constraints of one node (children assumed valid).
void validate_spec(const RingSpec& spec);

bool is_prime(u64 n);
// Returns true and fills p/e when n = p^e with p prime, e >= 1.
bool is_prime_power(u64 n, u64* p = nullptr, u64* e = nullptr);
// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<u64, u64>> factorize(u64 n);

}  // namespace ringsum
