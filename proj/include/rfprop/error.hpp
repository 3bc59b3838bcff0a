// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace rfprop {

// Base type for everything this library throws on bad input or bad data.
// Subclasses exist so callers can react to specific failure modes; all of
// them carry a plain-language message.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { public: using Error::Error; };
class OutOfBoundsError : public Error { public: using Error::Error; };
class NoDataError : public Error { public: using Error::Error; };
class KindError : public Error { public: using Error::Error; };
class GeometryMismatchError : public Error { public: using Error::Error; };
class GeometryDisjointError : public Error { public: using Error::Error; };
class FactorTooLargeError : public Error { public: using Error::Error; };
class UnmappedCodeError : public Error { public: using Error::Error; };
class EmptyClassError : public Error { public: using Error::Error; };
class AntipodalError : public Error { public: using Error::Error; };
class DegenerateLinkError : public Error { public: using Error::Error; };
class ProfileMismatchError : public Error { public: using Error::Error; };
class EmptyInputError : public Error { public: using Error::Error; };

} // namespace rfprop
