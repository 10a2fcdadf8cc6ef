#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <string>

#include "xg/baselines.hpp"
#include "xg/parallel.hpp"
#include "xg/xorgens.hpp"

namespace xg {

/// A stream of w-bit words.  All statistical tests and benchmarks consume
/// generators through this surface.
class WordSource {
public:
    virtual ~WordSource() = default;
    virtual std::uint64_t next() = 0;
    virtual unsigned word_bits() const = 0;
};

class XorgensSource final : public WordSource {
public:
    XorgensSource(const GeneratorParams& params, std::uint64_t seed)
        : state_(params, seed) {}
    std::uint64_t next() override { return state_.next_word(); }
    unsigned word_bits() const override { return state_.word_bits(); }
    XorgensState& state() noexcept { return state_; }

private:
    XorgensState state_;
};

class RawXorgensSource final : public WordSource {
public:
    RawXorgensSource(const GeneratorParams& params, std::uint64_t seed)
        : gen_(params, seed) {}
    std::uint64_t next() override { return gen_.next(); }
    unsigned word_bits() const override { return gen_.word_bits(); }

private:
    RawXorgens gen_;
};

class XorwowSource final : public WordSource {
public:
    explicit XorwowSource(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t next() override { return gen_.next(); }
    unsigned word_bits() const override { return 32; }

private:
    Xorwow gen_;
};

class Mt19937Source final : public WordSource {
public:
    explicit Mt19937Source(std::uint32_t seed) : gen_(seed) {}
    std::uint64_t next() override { return gen_.next(); }
    unsigned word_bits() const override { return 32; }

private:
    Mt19937 gen_;
};

/// Test helper: words supplied by a callable.
class CallbackSource final : public WordSource {
public:
    CallbackSource(std::function<std::uint64_t()> fn, unsigned bits)
        : fn_(std::move(fn)), bits_(bits) {}
    std::uint64_t next() override { return fn_(); }
    unsigned word_bits() const override { return bits_; }

private:
    std::function<std::uint64_t()> fn_;
    unsigned bits_;
};

/// Little-endian 32-bit words read from a stream (e.g. a `gen --format
/// raw-le` file).  Throws std::runtime_error on exhaustion.
class FileWordSource final : public WordSource {
public:
    explicit FileWordSource(std::istream& in, unsigned bits = 32);
    std::uint64_t next() override;
    unsigned word_bits() const override { return bits_; }

private:
    std::istream& in_;
    unsigned bits_;
};

/// MSB-first bit view over a word source.  Every known-answer vector in
/// the test battery depends on this extraction order.
class BitSource {
public:
    explicit BitSource(WordSource& src) : src_(src) {}

    unsigned next_bit() {
        if (remaining_ == 0) {
            current_ = src_.next();
            remaining_ = src_.word_bits();
        }
        --remaining_;
        return static_cast<unsigned>((current_ >> remaining_) & 1);
    }

private:
    WordSource& src_;
    std::uint64_t current_ = 0;
    unsigned remaining_ = 0;
};

} // namespace xg
