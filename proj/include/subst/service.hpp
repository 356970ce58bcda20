#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace subst {

struct ServiceResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// POST /api/analyze with body {"sub": ..., "options": {...}}.
// 400 malformed input, 422 a requested stage was refused, 413 a requested stage ran out of budget.
ServiceResponse handle_analyze(const std::string& body);
// GET /api/graph?sub=...&kind=bd|ap&format=dot|tikz
ServiceResponse handle_graph(const std::string& sub, const std::string& kind, const std::string& format);
ServiceResponse handle_health();

void register_routes(httplib::Server& server);

// Blocks until the server stops. Returns false when the address cannot be bound.
bool serve(const std::string& bind, int port);

}  // namespace subst
