#pragma once

#include <stdexcept>
#include <string>

namespace pgq
{
    /// Checked integer arithmetic left the 64-bit range.
    class OverflowError : public std::overflow_error
    {
    public:
        using std::overflow_error::overflow_error;
    };

    /// An operation was called outside its precondition (bad parameters, mismatched graph, ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    /// Malformed pgqgraph / pgqinc input.
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A clique family contains a set that is not a clique.
    class StructuralError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A result contradicts a proven structural fact; always a bug.
    class InternalInconsistency : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };
}
