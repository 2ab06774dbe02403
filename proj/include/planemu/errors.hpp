#pragma once

#include <stdexcept>
#include <string>

namespace planemu
{
    /// Base of every exception thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class GraphError : public Error
    {
    public:
        using Error::Error;
    };

    class MapError : public Error
    {
    public:
        using Error::Error;
    };

    class EmbeddingError : public Error
    {
    public:
        using Error::Error;
    };

    class CoverError : public Error
    {
    public:
        using Error::Error;
    };

    class ConstructionError : public Error
    {
    public:
        using Error::Error;
    };

    class SearchError : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed or truncated input files.
    class ParseError : public Error
    {
    public:
        using Error::Error;
    };
}
