#pragma once

namespace schubert {

// Serial paths are the reference; parallel paths use OpenMP when available.
enum class Execution { serial, parallel };

}  // namespace schubert
