#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multires
{
    /// Base of every error the library raises.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;

        /// Short machine-parsable tag, e.g. "input" or "cap".
        virtual auto category() const noexcept -> const char * = 0;
    };

    class InputError : public Error
    {
    public:
        using Error::Error;
        auto category() const noexcept -> const char * override { return "input"; }
    };

    class ParseError : public InputError
    {
    public:
        ParseError(std::size_t line, const std::string & what) :
            InputError("line " + std::to_string(line) + ": " + what),
            _line(line)
        {
        }

        auto line() const noexcept -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    class ValidationError : public InputError
    {
    public:
        using InputError::InputError;
    };

    class ConnectivityError : public InputError
    {
    public:
        ConnectivityError(int u, int v) :
            InputError("graph is disconnected: no path between " + std::to_string(u) + " and " + std::to_string(v)),
            _u(u), _v(v)
        {
        }

        auto first() const noexcept -> int { return _u; }
        auto second() const noexcept -> int { return _v; }

    private:
        int _u, _v;
    };

    /// An exact computation was asked for above its configured vertex cap.
    class CapExceeded : public Error
    {
    public:
        using Error::Error;
        auto category() const noexcept -> const char * override { return "cap"; }
    };

    /// The subset budget ran out before the search could decide.
    class BudgetExhausted : public Error
    {
    public:
        using Error::Error;
        auto category() const noexcept -> const char * override { return "budget"; }
    };
}
