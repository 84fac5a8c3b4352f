#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An entry exceeds the simple-digraph bound N-1.
class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(std::size_t index)
        : Error("degree entry " + std::to_string(index) + " exceeds N-1"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NegativeDegreeError : public Error {
public:
    explicit NegativeDegreeError(std::size_t index)
        : Error("degree entry " + std::to_string(index) + " is negative"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class EmptySequenceError : public Error {
public:
    EmptySequenceError() : Error("operation requires a non-empty sequence") {}
};

class NotGraphicError : public Error {
public:
    NotGraphicError() : Error("sequence is not graphic") {}
};

class NotDigraphicError : public Error {
public:
    NotDigraphicError() : Error("sequence is not digraphic") {}
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class InvalidDigraphError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

} // namespace splitkit
