#include <sstream>

#include "doctest.h"
#include "finitary/cli.hpp"

using finitary::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args, std::string stdin_text = "") {
  std::ostringstream out, err;
  int code = run(args, stdin_text, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("metric examples") {
  Result r = cli({"dist", "{}", "{{}}"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/2\n");
  CHECK(cli({"dist", "{{}}", "{{},{{}}}"}).out == "1/4\n");
  CHECK(cli({"dist", "{}", "{}"}).out == "0\n");
}

TEST_CASE("solve and composition through stdin") {
  Result r = cli({"solve", "x={x};"});
  CHECK(r.code == 0);
  CHECK(r.out == "x0={x0}\n");

  // self-membership query: both arguments read the previous output
  Result m = cli({"member", "-", "-"}, r.out);
  CHECK(m.code == 0);
  CHECK(m.out == "true\n");

  Result all = cli({"solve", "a={b};b={a};", "--all"});
  CHECK(all.code == 0);
  CHECK(all.out == "a = x0={x0}\nb = x0={x0}\n");

  Result var = cli({"solve", "a={};b={a};", "--var", "b"});
  CHECK(var.out == "{{}}\n");
}

TEST_CASE("set verbs") {
  CHECK(cli({"eval", "{{}} | {}"}).out == "{{}}\n");
  CHECK(cli({"minimize", "x={x};"}).out == "x0={x0}\n");
  CHECK(cli({"bisim", "x={x};", "y={{y}};"}).out == "true\n");
  CHECK(cli({"member", "{}", "{{}}"}).out == "true\n");
  CHECK(cli({"trunc", "2", "x={x};"}).out == "{{{}}}\n");
  CHECK(cli({"dot", "x={x};"}).out.find("doublecircle") != std::string::npos);
  CHECK(cli({"process", "e.0+e.e.0"}).out == "{{},{{}}}\n");
}

TEST_CASE("modal verbs") {
  CHECK(cli({"sat", "{}", "[]false"}).out == "true\n");
  CHECK(cli({"sat", "x={x};", "<>true"}).out == "true\n");
  CHECK(cli({"master", "{}"}).out == "[]false\n");
  CHECK(cli({"valid", "<>true"}).out == "false\n");
  CHECK(cli({"satisfiable", "<>true"}).out == "true\n");
  CHECK(cli({"nf", "<>true"}).out == "depth=1 count=1\n{{}}\n");
  CHECK(cli({"levels", "1"}).out == "size=2\n{}\n{{}}\n");
  CHECK(cli({"algebra-size", "3"}).out == "65536\n");
  CHECK(cli({"algebra-size", "4"}).out == "2^65536\n");
  CHECK(cli({"atoms", "1"}).out == "[]false\n[]true&<>true\n");
}

TEST_CASE("set-theory verbs") {
  CHECK(cli({"sep", "{{},{{}}}", "<>true"}).out == "{{{}}}\n");
  CHECK(cli({"replace", "{{},{{}}}", "{v}"}).out == "{{{}},{{{}}}}\n");
  CHECK(cli({"choice", "{{{},{{}}},{{{}}}}", "v"}).out == "{{},{{}}}\n");
}

TEST_CASE("partial and limit verbs") {
  CHECK(cli({"em-leq", "{_|_}", "{{}}"}).out == "true\n");
  CHECK(cli({"em-leq", "{{}}", "{_|_}"}).out == "false\n");
  CHECK(cli({"bot-trunc", "1", "{{},{{}}}"}).out == "{_|_}\n");
  CHECK(cli({"point", "omega", "--k", "3"}).out == "{{{{}}}}\n");
  CHECK(cli({"point", "infinity", "--k", "3"}).out == "{{},{{}},{{{}}}}\n");
  CHECK(cli({"point", "universe", "--k", "2"}).out == "{{},{{}}}\n");

  Result it = cli({"iterate", "{x}", "{}", "3"});
  CHECK(it.out.find("S3={{{{}}}}") != std::string::npos);
  CHECK(it.out.find("d(S0,S1)=1/2") != std::string::npos);
  CHECK(it.out.find("d(S1,S2)=1/4") != std::string::npos);
  CHECK(it.out.find("d(S2,S3)=1/8") != std::string::npos);
}

TEST_CASE("axiom suite verb") {
  Result r = cli({"axioms"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"no-such-verb"}).code == 2);
  CHECK(cli({"dist", "{"}).code == 2);           // parse error
  CHECK(cli({"dist", "{}"}).code == 2);          // arity
  CHECK(cli({"master", "x={x};"}).code == 1);    // non-well-founded
  CHECK(cli({"levels", "9"}).code == 1);         // cap exceeded
  CHECK(cli({"choice", "{{}}", "v"}).code == 1); // empty f(z)
  CHECK(cli({"solve", "x=y;y={x};"}).code == 1); // unguarded
  CHECK(cli({"point", "omega"}).code == 2);      // missing --k
  CHECK(cli({"help"}).code == 0);
}

TEST_CASE("outputs are byte-stable") {
  for (auto args : {std::vector<std::string>{"eval", "{{{}},{}}"},
                    {"solve", "a={a,b};b={};"},
                    {"atoms", "2"},
                    {"nf", "[](<>true)"}}) {
    Result a = cli(args);
    Result b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_SUITE_END();
