/*
 * Copyright (C) 2026 The ecrt-paillier Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ECRT_ERRORS_HPP
#define ECRT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ecrt {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnderflowError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument was violated (bounds, parity, sizes).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class ContextMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidCiphertextError : public Error {
public:
    using Error::Error;
};

class KeyMismatchError : public Error {
public:
    using Error::Error;
};

class KeygenError : public Error {
public:
    using Error::Error;
};

} // namespace ecrt

#endif // ECRT_ERRORS_HPP
