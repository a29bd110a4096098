#pragma once

#include <string>

namespace emberank {

// Porter stemming algorithm (English). Follows Martin Porter's maintained
// ANSI C reference, including its two documented departures from the 1980
// paper (bli->ble in step 2, logi->log). Expects lowercase input; words of
// length <= 2 are returned unchanged.
std::string porter_stem(std::string word);

}  // namespace emberank
