#pragma once

#include <stdexcept>
#include <string>

namespace netres {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input documents (GraphML, edgelist, CSV, JSON text).
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed document that violates the event/scenario schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Referential integrity: duplicate ids, dangling references.
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Unknown component id passed to a query.
class LookupError : public Error {
public:
    using Error::Error;
};

// Argument of the wrong component kind (e.g. reachability on a non-router).
class TypeError : public Error {
public:
    using Error::Error;
};

// Cause/effect timestamp ordering broken after canonical sort.
class OrderingError : public Error {
public:
    using Error::Error;
};

// A generator backend cannot produce a scenario for the given context.
class GenerationError : public Error {
public:
    using Error::Error;
};

// Remote completion-service transport failure (timeout, bad response).
class TransportError : public Error {
public:
    using Error::Error;
};

// Invalid configuration values.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace netres
