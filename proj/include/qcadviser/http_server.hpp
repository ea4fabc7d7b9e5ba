// Copyright 2026 The qcadviser Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <memory>
#include <string>

#include "qcadviser/service.hpp"

namespace qcadviser {

struct HttpOptions {
  std::string host = "0.0.0.0";
  int port = 8080;              // 0 binds an ephemeral port
  std::string cors_origin = "*";
};

/// HTTP/JSON front end:
///   GET  /api/classes
///   GET  /api/classes/{id}/problems
///   POST /api/recommend
///   GET  /api/solvers/{id}/price
class HttpServer {
 public:
  HttpServer(AdviserService& service, HttpOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket and returns the bound port. Throws Error on failure.
  int bind();
  /// Serves until stop(); call after bind().
  void listen();
  /// Blocks until a concurrent listen() is accepting connections.
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace qcadviser
