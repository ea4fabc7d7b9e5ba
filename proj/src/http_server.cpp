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

#include "qcadviser/http_server.hpp"

#include <httplib.h>

#include "qcadviser/errors.hpp"

namespace qcadviser {

struct HttpServer::Impl {
  AdviserService& service;
  HttpOptions options;
  httplib::Server server;

  Impl(AdviserService& s, HttpOptions o) : service(s), options(std::move(o)) {}

  static void send(httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body, api.content_type);
  }

  void install_routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", options.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});

    server.Get("/api/classes", [this](const httplib::Request&, httplib::Response& res) {
      send(res, service.list_classes());
    });
    server.Get("/api/classes/:id/problems", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.list_problems(req.path_params.at("id")));
    });
    server.Post("/api/recommend", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.recommend(req.body));
    });
    server.Get("/api/solvers/:id/price", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.price(req.path_params.at("id")));
    });
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      std::string detail = "internal error";
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        detail = e.what();
      } catch (...) {
      }
      send(res, problem_response(500, detail));
    });
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty() && res.status == 404) send(res, problem_response(404, "no such endpoint"));
    });
  }
};

HttpServer::HttpServer(AdviserService& service, HttpOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  impl_->install_routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  int port = 0;
  if (impl_->options.port == 0) {
    port = impl_->server.bind_to_any_port(impl_->options.host);
  } else if (impl_->server.bind_to_port(impl_->options.host, impl_->options.port)) {
    port = impl_->options.port;
  } else {
    port = -1;
  }
  if (port <= 0) {
    throw Error("cannot bind " + impl_->options.host + ":" + std::to_string(impl_->options.port));
  }
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace qcadviser
