// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrmt {

// Broad failure classes, mapped onto process exit codes by the CLI.
enum class ErrorKind : std::uint8_t {
  Usage = 1,   // bad arguments or configuration
  Data = 2,    // malformed or inconsistent input data
  Engine = 3,  // translation engine / network failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class Utf8Error : public Error {
 public:
  Utf8Error(const std::string& where, std::size_t line_no)
      : Error(ErrorKind::Data,
              where + ": invalid UTF-8 on line " + std::to_string(line_no)),
        line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }  // 1-based

 private:
  std::size_t line_no_;
};

class LineCountMismatch : public Error {
 public:
  LineCountMismatch(std::size_t n_src, std::size_t n_tgt)
      : Error(ErrorKind::Data, "line count mismatch: source has " +
                                   std::to_string(n_src) + " lines, target has " +
                                   std::to_string(n_tgt)),
        n_src_(n_src),
        n_tgt_(n_tgt) {}
  std::size_t n_src() const { return n_src_; }
  std::size_t n_tgt() const { return n_tgt_; }

 private:
  std::size_t n_src_;
  std::size_t n_tgt_;
};

class MalformedRow : public Error {
 public:
  explicit MalformedRow(std::size_t line_no)
      : Error(ErrorKind::Data,
              "malformed row on line " + std::to_string(line_no) +
                  ": expected exactly 2 tab-separated columns"),
        line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }  // 1-based

 private:
  std::size_t line_no_;
};

class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& what)
      : Error(ErrorKind::Usage, what) {}
};

class LanguageMismatch : public Error {
 public:
  explicit LanguageMismatch(const std::string& what)
      : Error(ErrorKind::Data, what) {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error(ErrorKind::Data, "length mismatch: " + std::to_string(lhs) +
                                   " vs " + std::to_string(rhs)) {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class EmptyReference : public Error {
 public:
  EmptyReference()
      : Error(ErrorKind::Data, "reference is empty after tokenization") {}
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(long long n)
      : Error(ErrorKind::Usage,
              "n-gram order must be >= 1, got " + std::to_string(n)) {}
};

class EngineUnavailable : public Error {
 public:
  explicit EngineUnavailable(const std::string& what)
      : Error(ErrorKind::Engine, what) {}
};

class ProtocolViolation : public Error {
 public:
  ProtocolViolation(std::size_t requested, std::size_t received)
      : Error(ErrorKind::Engine,
              "engine returned " + std::to_string(received) +
                  " translations for " + std::to_string(requested) + " texts") {}
};

// Retryable engine failure (non-200, malformed body, transport error).
// translate_batch converts it into EngineUnavailable once retries run out.
class EngineTransient : public Error {
 public:
  explicit EngineTransient(const std::string& what)
      : Error(ErrorKind::Engine, what) {}
};

class InvalidOverride : public Error {
 public:
  explicit InvalidOverride(const std::string& what)
      : Error(ErrorKind::Usage, what) {}
};

class ManifestParseError : public Error {
 public:
  explicit ManifestParseError(const std::string& what)
      : Error(ErrorKind::Data, what) {}
};

}  // namespace lrmt
