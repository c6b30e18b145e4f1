#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Operands live in different polynomial rings (arity or variable count).
class ArityMismatch : public Error {
   public:
    using Error::Error;
};

// Rational mixed with F_p, or two different moduli.
class DomainMismatch : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

// An operation was called outside its stated preconditions.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

// A certificate (residue, identity, set equality) did not come out as claimed.
class CertificationError : public Error {
   public:
    using Error::Error;
};

}  // namespace folia
