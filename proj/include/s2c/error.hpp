#pragma once

#include <stdexcept>
#include <string>

namespace s2c {

// Base class for every error the toolkit raises deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Lexer failure. line/column are 1-based and point at the offending character
// (for unterminated strings: the opening quote).
class LexicalError : public Error {
public:
    LexicalError(const std::string& msg, int line, int column);
    int line;
    int column;
};

// Parser failure at a specific token. line/column are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column);
    int line;
    int column;
};

// Input uses a SQL construct outside the supported fragment; `feature` names it.
class UnsupportedFeatureError : public Error {
public:
    UnsupportedFeatureError(std::string feature, int line, int column);
    std::string feature;
    int line;
    int column;
};

// Diagram composition / typing violation.
class CompositionError : public Error {
public:
    using Error::Error;
};

// A functor was applied to a diagram containing an unmapped generator.
class MissingMappingError : public Error {
public:
    using Error::Error;
};

// Malformed serialized data; the message carries a JSON-pointer-style path.
class FormatError : public Error {
public:
    using Error::Error;
};

// An AST node has no corresponding grammar rule.
class EncodingError : public Error {
public:
    using Error::Error;
};

// A word has no entry in a closed dictionary.
class DictionaryMissError : public Error {
public:
    using Error::Error;
};

// Cap/cup elimination met a configuration it cannot rewrite.
class RewriteError : public Error {
public:
    using Error::Error;
};

// A cap (or cup) has both legs on the diagram boundary, so no box can absorb it.
class IrreducibleCapError : public RewriteError {
public:
    using RewriteError::RewriteError;
};

// Circuit compilation was handed a diagram that still contains caps.
class NotCaplessError : public Error {
public:
    using Error::Error;
};

// Wire/qubit arity conflict between a diagram and the ansatz configuration.
class ArityError : public Error {
public:
    using Error::Error;
};

// Simulator contract violation (unbound symbol, dimension mismatch, ...).
class SimulationError : public Error {
public:
    using Error::Error;
};

// Label binning cannot produce the requested number of classes.
class BinningError : public Error {
public:
    using Error::Error;
};

// Optimizer/training failure (non-finite loss, bad schedule, empty batch).
class TrainingError : public Error {
public:
    using Error::Error;
};

// Randomized sampling exhausted its retry budget.
class SamplingError : public Error {
public:
    using Error::Error;
};

// Bad or inconsistent external data (CSV files, seed documents, executors).
class DataError : public Error {
public:
    using Error::Error;
};

// Invalid run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A pipeline stage was invoked before the stages it depends on.
class PrerequisiteError : public Error {
public:
    using Error::Error;
};

}  // namespace s2c
