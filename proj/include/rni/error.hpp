#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rni {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error
{
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), detail_(what), line_(line),
          column_(column)
    {
    }

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    // message without the position prefix
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
};

#define RNI_DECLARE_ERROR(Name)      \
    class Name : public Error        \
    {                                \
    public:                          \
        using Error::Error;          \
    }

RNI_DECLARE_ERROR(UnknownAction);
RNI_DECLARE_ERROR(OwnershipError);
RNI_DECLARE_ERROR(AlphabetMismatch);
RNI_DECLARE_ERROR(Inadmissible);
RNI_DECLARE_ERROR(IllegalInMode);
RNI_DECLARE_ERROR(ProtocolViolation);
RNI_DECLARE_ERROR(SulFailure);
RNI_DECLARE_ERROR(BudgetExhausted);
RNI_DECLARE_ERROR(NotACounterexample);
RNI_DECLARE_ERROR(NotDistinguished);
RNI_DECLARE_ERROR(FormatError);
RNI_DECLARE_ERROR(ManifestError);

#undef RNI_DECLARE_ERROR

} // namespace rni
