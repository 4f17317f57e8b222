#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valence {

// Raised by data-file loaders; carries a 1-based line number when known.
class LoadError : public std::runtime_error {
  public:
    explicit LoadError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class TrainingError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TranslationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class EmotionmlError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the statistical engine is invoked without a loaded model.
class ModelUnavailableError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace valence
