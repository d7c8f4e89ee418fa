// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// Exception type shared by every module. Each exception carries a kind so
// callers (and the command-line tool) can map failures to exit codes without
// parsing messages.

#ifndef LEECHCOH_ERROR_HPP_
#define LEECHCOH_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <string_view>

namespace leechcoh {

  enum class ErrorKind {
    invalid_argument,
    shape_mismatch,
    not_well_defined,
    composition_nonzero,
    invalid_monoid,
    invalid_coefficients,
    not_a_group,
    action_not_homomorphic,
    duplicate_floor,
    invalid_move,
    too_many_descents,
    descent_below_bottom_floor,
    column_condition,
    path_condition,
    not_a_double_complex,
    no_new_class,
    not_surjective,
    input
  };

  constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::invalid_argument: return "InvalidArgument";
      case ErrorKind::shape_mismatch: return "ShapeMismatch";
      case ErrorKind::not_well_defined: return "NotWellDefined";
      case ErrorKind::composition_nonzero: return "CompositionNonzero";
      case ErrorKind::invalid_monoid: return "InvalidMonoid";
      case ErrorKind::invalid_coefficients: return "InvalidCoefficients";
      case ErrorKind::not_a_group: return "NotAGroup";
      case ErrorKind::action_not_homomorphic: return "ActionNotHomomorphic";
      case ErrorKind::duplicate_floor: return "DuplicateFloor";
      case ErrorKind::invalid_move: return "InvalidMove";
      case ErrorKind::too_many_descents: return "TooManyDescents";
      case ErrorKind::descent_below_bottom_floor:
        return "DescentBelowBottomFloor";
      case ErrorKind::column_condition: return "ColumnCondition";
      case ErrorKind::path_condition: return "PathCondition";
      case ErrorKind::not_a_double_complex: return "NotADoubleComplex";
      case ErrorKind::no_new_class: return "NoNewClass";
      case ErrorKind::not_surjective: return "NotSurjective";
      case ErrorKind::input: return "InputError";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace leechcoh

#endif  // LEECHCOH_ERROR_HPP_
