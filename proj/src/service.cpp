#include "subst/service.hpp"

#include <iostream>

#include "subst/complexes.hpp"
#include "subst/error.hpp"
#include "subst/report.hpp"

// After Eigen: the resolver headers pulled in here define a macro named _res.
#include <httplib.h>

namespace subst {

using nlohmann::json;

namespace {

ServiceResponse error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return {status, extra.dump()};
}

}  // namespace

ServiceResponse handle_analyze(const std::string& body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::exception& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!request.is_object() || !request.contains("sub") || !request["sub"].is_string())
    return error(400, "request needs a string field \"sub\"");
  try {
    const AnalysisOptions options = options_from_json(request.value("options", json::object()));
    const AnalysisReport report = analyze(request["sub"].get<std::string>(), options);
    const json j = to_json(report);
    switch (report_exit_code(report, options)) {
      case 3: return error(422, "a requested stage was refused", {{"report", j}});
      case 4: return error(413, "a requested stage exceeded its budget", {{"report", j}});
      default: return {200, j.dump()};
    }
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const BudgetExceeded& e) {
    return error(413, e.what());
  } catch (const Refused& e) {
    return error(422, e.what());
  }
}

ServiceResponse handle_graph(const std::string& sub, const std::string& kind, const std::string& format) {
  if (kind != "bd" && kind != "ap") return error(400, "kind must be bd or ap");
  if (format != "dot" && format != "tikz") return error(400, "format must be dot or tikz");
  try {
    const Substitution phi = parse_substitution(sub);
    const ComplexGraph g = kind == "bd" ? barge_diamond(phi) : anderson_putnam(phi);
    const bool dot = format == "dot";
    return {200, export_graph(g, dot ? GraphFormat::DOT : GraphFormat::TikZ), dot ? "text/vnd.graphviz" : "text/x-tex"};
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const Refused& e) {
    return error(422, e.what());
  } catch (const BudgetExceeded& e) {
    return error(413, e.what());
  }
}

ServiceResponse handle_health() { return {200, json{{"status", "ok"}}.dump()}; }

void register_routes(httplib::Server& server) {
  auto send = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server.Post("/api/analyze", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_analyze(req.body));
  });
  server.Get("/api/graph", [send](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("sub")) return send(res, error(400, "missing parameter sub"));
    const std::string kind = req.has_param("kind") ? req.get_param_value("kind") : "bd";
    const std::string format = req.has_param("format") ? req.get_param_value("format") : "dot";
    send(res, handle_graph(req.get_param_value("sub"), kind, format));
  });
  server.Get("/health", [send](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(json{{"error", what}}.dump(), "application/json");
  });
}

bool serve(const std::string& bind, int port) {
  httplib::Server server;
  register_routes(server);
  if (!server.bind_to_port(bind, port)) return false;
  std::cerr << "listening on " << bind << ":" << port << "\n";
  return server.listen_after_bind();
}

}  // namespace subst
