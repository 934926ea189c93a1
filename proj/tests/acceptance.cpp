#include "anomaly/acceptance.hpp"

#include <cstdio>
#include <cstring>

// One line per criterion; exit status 0 iff every criterion passes.
int main(int argc, char **argv)
{
	bool full = argc > 1 && std::strcmp(argv[1], "--full") == 0;
	bool all = true;
	anomaly::run_acceptance(full, {}, [&](const anomaly::CriterionResult &r) {
		std::printf("criterion %2d %s: %s [%s] %.1f ms\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
		            r.summary.c_str(), r.wall_ms);
		for (const auto &f : r.failures)
			std::printf("    %s\n", f.c_str());
		std::fflush(stdout);
		all = all && r.pass;
	});
	std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
	return all ? 0 : 1;
}
