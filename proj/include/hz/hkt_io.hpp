#pragma once

#include <iosfwd>
#include <string>

#include "hz/kernel.hpp"

namespace hz {

// Text dump, bit-exact: header line
//   HKT <n> <N_1..N_n> <c> <flipped:0|1> <offset components>
// followed by the weights with 17 significant digits, row-major, one channel
// per block (blocks separated by a blank line, one spatial row per line).
void dump_hkt(std::ostream& os, const HermiteKernelTensor& K);
std::string dump_hkt_string(const HermiteKernelTensor& K);

// Parses a dump back; multiplicities are not part of the format, so `nu` and
// `channels` are left empty and only shape/weights/offset/flag are recovered.
HermiteKernelTensor parse_hkt(std::istream& is);

}  // namespace hz
