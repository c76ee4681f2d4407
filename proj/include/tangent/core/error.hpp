// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tangent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error("syntax error at offset " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class UnknownFamilyError : public Error {
 public:
  using Error::Error;
};

class ConstraintError : public Error {
 public:
  ConstraintError(const std::string& family, const std::string& clause)
      : Error("constraint violation in family " + family + ": requires " + clause),
        family_(family),
        clause_(clause) {}
  const std::string& family() const { return family_; }
  const std::string& clause() const { return clause_; }

 private:
  std::string family_;
  std::string clause_;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace tangent
