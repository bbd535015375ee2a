#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccrmu
{

enum class errc
{
  syntax,
  positivity,
  unknown_action,
  quantifier_present,
  fixpoint_present,
  not_disjunctive,
  side_condition_unknown,
  unsupported_signature,
  unbound_variable,
  state_clash,
  unknown_state,
  cyclic_without_bound,
  not_tree_like,
  not_disjoint,
  alphabet_mismatch,
  invalid_model,
  invalid_argument,
  io
};

/// Stable machine-readable name, e.g. "NotDisjunctive".
std::string_view to_string( errc code ) noexcept;

class error : public std::runtime_error
{
public:
  error( errc code, const std::string& message, std::string subject = {} )
    : std::runtime_error( message ), _code( code ), _subject( std::move( subject ) )
  {
  }

  errc code() const noexcept { return _code; }

  /// The offending item (formula text, variable, state id, ...), if any.
  const std::string& subject() const noexcept { return _subject; }

private:
  errc _code;
  std::string _subject;
};

class syntax_error : public error
{
public:
  syntax_error( const std::string& message, std::size_t offset )
    : error( errc::syntax, message + " at byte " + std::to_string( offset ) ), _offset( offset )
  {
  }

  std::size_t offset() const noexcept { return _offset; }

private:
  std::size_t _offset;
};

} // namespace ccrmu
