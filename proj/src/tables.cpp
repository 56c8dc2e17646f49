#include "bfgp/tables.hpp"

namespace bfgp {

std::optional<int> best_known_balanced_nl(int n) {
  switch (n) {
    case 4:
      return 4;
    case 5:
      return 12;
    case 6:
      return 26;
    case 7:
      return 56;
    case 8:
      return 116;
    case 9:
      return 240;
    case 10:
      return 492;
    case 11:
      return 992;
    case 12:
      return 2012;
    case 13:
      return 4036;
    case 14:
      return 8120;
    case 15:
      return 16272;
    case 16:
      return 32638;
    default:
      return std::nullopt;
  }
}

std::optional<int> construction_chain_nl(int size) {
  switch (size) {
    case 7:
      return 56;
    case 8:
      return 116;
    case 9:
      return 240;
    case 10:
      return 488;
    case 11:
      return 992;
    case 12:
      return 2000;
    case 13:
      return 4032;
    case 14:
      return 8096;
    case 15:
      return 16256;
    case 16:
      return 32576;
    case 17:
      return 65280;
    case 18:
      return 130688;
    default:
      return std::nullopt;
  }
}

}  // namespace bfgp
