#pragma once

namespace pbc {

// Selects between the OpenMP kernel and the serial reference loop that every
// parallel kernel keeps alongside it. Both paths produce identical results.
enum class Exec { serial, parallel };

}  // namespace pbc
