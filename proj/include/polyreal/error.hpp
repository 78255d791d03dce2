#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyreal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankError : public Error {
public:
    RankError(const std::string& family, int minimum)
        : Error("family " + family + " requires n >= " + std::to_string(minimum)), minimum_(minimum) {}
    int minimum() const noexcept { return minimum_; }

private:
    int minimum_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class MissingIndexError : public Error {
public:
    explicit MissingIndexError(int index)
        : Error("index " + std::to_string(index) + " does not occur in the word"), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

class ConsecutiveRepeatError : public Error {
public:
    explicit ConsecutiveRepeatError(int position)
        : Error("consecutive repeat at word position " + std::to_string(position)), position_(position) {}
    int position() const noexcept { return position_; }

private:
    int position_;
};

class NotAdaptedError : public Error {
public:
    NotAdaptedError(int i, int j, std::vector<int> window)
        : Error("word is not adapted: pair (" + std::to_string(i) + "," + std::to_string(j) +
                ") does not alternate"),
          i_(i), j_(j), window_(std::move(window)) {}
    std::pair<int, int> pair() const { return {i_, j_}; }
    // word positions (1-based) of the offending pair subsequence over one period
    const std::vector<int>& window() const noexcept { return window_; }

private:
    int i_, j_;
    std::vector<int> window_;
};

class FamilyMismatchError : public Error {
public:
    using Error::Error;
};

class NotASiteError : public Error {
public:
    using Error::Error;
};

class ResourceLimitError : public Error {
public:
    ResourceLimitError(const std::string& what, std::size_t partial)
        : Error(what + " exceeded its cap after " + std::to_string(partial) + " items"), partial_(partial) {}
    std::size_t partial() const noexcept { return partial_; }

private:
    std::size_t partial_;
};

}  // namespace polyreal
