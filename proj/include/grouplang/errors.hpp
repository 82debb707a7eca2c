#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace grouplang {

/// Row/column coordinate of a label-matrix cell, 1-based.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LetterOutOfRange : public Error {
 public:
  using Error::Error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

/// A finite Cayley table that fails the group axioms, or an otherwise
/// unusable group description.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

/// Malformed automaton, grammar or group description.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A label set grew beyond the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cardinality, std::size_t cap)
      : Error("label set exceeded cap of " + std::to_string(cap) + " elements (reached " +
              std::to_string(cardinality) + ")"),
        cardinality_(cardinality),
        cap_(cap) {}

  std::size_t cardinality() const noexcept { return cardinality_; }
  std::size_t cap() const noexcept { return cap_; }
  const std::optional<Cell>& cell() const noexcept { return cell_; }
  void set_cell(Cell c) { cell_ = c; }

 private:
  std::size_t cardinality_;
  std::size_t cap_;
  std::optional<Cell> cell_;
};

/// Raised when witness extraction cannot produce a counterexample for a
/// violation the decision procedure detected. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Enumeration hit its max_words safety cap.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace grouplang
