#pragma once

#include "boxlogic/bitvec.hpp"

#include <cstdint>

namespace boxlogic {

using EventId = std::uint32_t;

/// How an event entered the family: seed constants, a generator, or one of
/// the two closure steps. Operand fields refer to delta indices (or the
/// generator ordinal), so the construction of any member can be audited.
enum class CertKind : std::uint8_t {
    Empty,
    Full,
    Generator,
    ComplementOf,
    DisjointUnionOf,
};

struct Certificate {
    CertKind kind = CertKind::Generator;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

struct Event {
    BitVec members;
    Certificate cert;
};

} // namespace boxlogic
