#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mike {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input files; carries a human-readable location where known.
class ParseError : public Error {
public:
    using Error::Error;
};

// Data that parsed but breaks a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class EmptyCorpusError : public Error {
public:
    EmptyCorpusError() : Error("corpus is empty") {}
};

class NoHopAvailableError : public Error {
public:
    explicit NoHopAvailableError(const std::string& object)
        : Error("no outgoing edge from object '" + object + "'") {}
};

class MissingTemplateError : public Error {
public:
    explicit MissingTemplateError(const std::string& relation)
        : Error("no query template for relation '" + relation + "'") {}
};

class MissingCounterpartError : public Error {
public:
    MissingCounterpartError(const std::string& entry_id, const std::string& lang)
        : Error("entry '" + entry_id + "' has no counterpart in language '" + lang + "'") {}
};

class ContextOverflowError : public Error {
public:
    ContextOverflowError(std::size_t measured, std::size_t limit)
        : Error("assembled prompt is " + std::to_string(measured) +
                " bytes, context limit is " + std::to_string(limit)),
          measured_length(measured), limit(limit) {}
    std::size_t measured_length;
    std::size_t limit;
};

class TransportError : public Error {
public:
    TransportError(const std::string& what, int attempts)
        : Error(what + " (after " + std::to_string(attempts) + " attempts)"),
          attempts(attempts) {}
    int attempts;
};

class CapabilityUnsupportedError : public Error {
public:
    explicit CapabilityUnsupportedError(const std::string& what) : Error(what) {}
};

class RefusedResumeError : public Error {
public:
    explicit RefusedResumeError(const std::string& what) : Error(what) {}
};

}  // namespace mike
