#include "starblock/catalog.hpp"

namespace starblock::catalog {

// Orders of the 26 sporadic groups in factored form, transcribed from the
// ATLAS of Finite Groups. The decimal column is checked against the product
// of the factors in the unit tests.
const std::vector<SporadicEntry>& sporadic_table() {
  static const std::vector<SporadicEntry> table = {
      {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}, "7920"},
      {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}, "95040"},
      {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, "443520"},
      {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, "10200960"},
      {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, "244823040"},
      {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}, "175560"},
      {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}, "604800"},
      {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}, "50232960"},
      {"J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}, "86775571046077562880"},
      {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}, "44352000"},
      {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}, "898128000"},
      {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, "448345497600"},
      {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}, "4157776806543360000"},
      {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, "42305421312000"},
      {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, "495766656000"},
      {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}, "4030387200"},
      {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}, "273030912000000"},
      {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}, "51765179004000000"},
      {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}, "90745943887872000"},
      {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, "64561751654400"},
      {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}, "4089470473293004800"},
      {"Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}, "1255205709190661721292800"},
      {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}, "145926144000"},
      {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}, "460815505920"},
      {"B", {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}, "4154781481226426191177580544000000"},
      {"M", {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}}, "808017424794512875886459904961710757005754368000000000"},
  };
  return table;
}

}  // namespace starblock::catalog
