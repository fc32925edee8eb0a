#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semicon {

  enum class Errc {
    BadEntry,
    NotIdempotent,
    NotCommutative,
    NotAssociative,
    NoLeastAtZero,
    NotAMeetSemilattice,
    ArgumentIsZero,
    NotComparable,
    UnknownName,
    NotATree,
    SizeMismatch,
    TooLarge,
    NotACongruence,
    NotALattice,
    ContainsZero,
    TooManyUbtas,
    NotJoinClosed,
    DualityViolation,
    NotQuasiTree,
    NotConvexSubsemilattice,
    NotEnoughValues,
    Parse,
  };

  std::string_view errc_name(Errc code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          _code(code) {}

    Errc code() const noexcept {
      return _code;
    }

   private:
    Errc _code;
  };

}  // namespace semicon
