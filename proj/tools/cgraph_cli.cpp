// cgraph: command-line front end for the edge-colored graph library.
//
// Exit status: 0 success, 1 domain failure (not cisomorphic, no path,
// verification failed, counterexample found, size/budget exceeded),
// 2 usage or parse error.

#include <algorithm>
#include <climits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cgraph/apply.hpp"
#include "cgraph/enumerate.hpp"
#include "cgraph/format.hpp"
#include "cgraph/iso.hpp"
#include "cgraph/reconstruct.hpp"
#include "cgraph/structure.hpp"

namespace {

cgraph::CGraph load(const std::string& path) {
    if (path == "-") return cgraph::parse_cgraph(std::cin);
    return cgraph::read_cgraph_file(path);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    long long v = 0;
    while (in >> v) out.push_back(static_cast<int>(v));
    if (!in.eof()) throw cgraph::InvalidArgs("not an integer list: '" + text + "'");
    if (out.empty()) throw cgraph::InvalidArgs("empty integer list");
    return out;
}

void print_ints(const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) std::cout << " ";
        std::cout << xs[i];
    }
    std::cout << "\n";
}

void check_nonwhite_color(int j, int p) {
    if (j < 1 || j >= p)
        throw cgraph::InvalidArgs("color " + std::to_string(j) + " not in 1.." +
                                  std::to_string(p - 1));
}

void check_vertex_arg(int v, int n) {
    if (v < 0 || v >= n)
        throw cgraph::InvalidArgs("vertex " + std::to_string(v) + " not in 0.." +
                                  std::to_string(n - 1));
}

void print_assignment(const cgraph::Assignment& a, int real_rows, int real_cols) {
    std::vector<bool> person_done(real_rows, false);
    std::vector<bool> job_done(real_cols, false);
    for (auto [u, v] : a.pairs) {
        std::cout << "p" << (u + 1) << " j" << (v + 1) << "\n";
        person_done[u] = true;
        job_done[v] = true;
    }
    for (int u = 0; u < real_rows; ++u)
        if (!person_done[u]) std::cout << "p" << (u + 1) << " unfilled\n";
    for (int v = 0; v < real_cols; ++v)
        if (!job_done[v]) std::cout << "j" << (v + 1) << " unfilled\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-colored graph (cgraph) toolkit"};
    app.require_subcommand(1);

    std::string file1, file2;
    std::string perm_text;
    int color = 0, source = 0, target = 0;
    int n = 0, p = 0, q = 0;
    int scalar = 0;
    bool edges_flag = false, all_flag = false, verify_flag = false;

    auto* canon = app.add_subcommand("canon", "print the canonical code of a cgraph");
    canon->add_option("file", file1, "cgraph file ('-' for stdin)")->required();

    auto* iso = app.add_subcommand(
        "iso", "print a relabeling of FILE2 that yields FILE1, or ABSENT (exit 1)");
    iso->add_option("file1", file1, "cgraph file")->required();
    iso->add_option("file2", file2, "cgraph file")->required();

    auto* complement = app.add_subcommand("complement", "recolor every pair through a permutation");
    complement->add_option("file", file1, "cgraph file")->required();
    complement
        ->add_option("--perm", perm_text,
                     "images of colors 0..p-1 as a space-separated list, e.g. \"2 0 1\"")
        ->required();

    auto* decompose =
        app.add_subcommand("decompose", "print the subcgraph of one color class");
    decompose->add_option("file", file1, "cgraph file")->required();
    decompose->add_option("--color", color, "color class, 1..p-1")->required();

    auto* components =
        app.add_subcommand("components", "connected components, one block per line");
    components->add_option("file", file1, "cgraph file")->required();

    auto* kpath = app.add_subcommand(
        "kpath", "shortest single-color path between two vertices, or ABSENT (exit 1)");
    kpath->add_option("file", file1, "cgraph file")->required();
    kpath->add_option("-k", color, "path color, 1..p-1")->required();
    kpath->add_option("-s", source, "start vertex")->required();
    kpath->add_option("-t", target, "end vertex")->required();

    auto* jconnected = app.add_subcommand(
        "jconnected", "whether one color class connects all vertices: true, or false (exit 1)");
    jconnected->add_option("file", file1, "cgraph file")->required();
    jconnected->add_option("-j", color, "color class, 1..p-1")->required();

    auto* count =
        app.add_subcommand("count", "number of unlabeled cgraphs on n vertices over GF(p)");
    count->add_option("-n", n, "vertex count")->required();
    count->add_option("-p", p, "prime modulus")->required();

    auto* series = app.add_subcommand(
        "series", "configuration counting series, one 'coeff e1 .. e_{p-1}' line per monomial");
    series->add_option("-n", n, "vertex count")->required();
    series->add_option("-p", p, "prime modulus")->required();

    auto* cycle_index = app.add_subcommand(
        "cycle-index", "cycle index of the pair group, one 'num/den l1 l2 ..' line per term");
    cycle_index->add_option("-n", n, "vertex count")->required();

    auto* oracle = app.add_subcommand(
        "oracle", "unlabeled count by direct orbit counting over all n! permutations");
    oracle->add_option("-n", n, "vertex count")->required();
    oracle->add_option("-p", p, "prime modulus")->required();

    auto* deck = app.add_subcommand("deck", "card codes of the vertex (or edge) deck");
    deck->add_option("file", file1, "cgraph file")->required();
    deck->add_flag("--edges", edges_flag, "edge-deleted cards instead of vertex-deleted");

    auto* recon = app.add_subcommand(
        "recon-search",
        "exhaustive reconstruction counterexample search; 'code <...>' line per class, then "
        "'pair <i> <j>' per counterexample (exit 1 if any)");
    recon->add_option("-n", n, "vertex count")->required();
    recon->add_option("-p", p, "prime modulus")->required();
    recon->add_flag("--edges", edges_flag, "edge decks instead of vertex decks");

    auto* assign = app.add_subcommand(
        "assign", "job assignments from a matrix file: 'p<u> j<v>' lines, or NONE (exit 1)");
    assign->add_option("file", file1, "matrix file: one row per line, entry 0 or the 1-based "
                                      "column index")
        ->required();
    assign->add_flag("--all", all_flag, "all assignments, blank-line separated");

    auto* plane = app.add_subcommand(
        "plane", "projective plane of prime order q as a colored K_N, one color per line");
    plane->add_option("-q", q, "plane order (prime)")->required();
    plane->add_flag("--verify", verify_flag, "verify the packing instead of printing it");

    auto* triangles = app.add_subcommand(
        "triangles", "triangle census: total, monochromatic, rainbow, other");
    triangles->add_option("file", file1, "cgraph file")->required();

    auto* vec = app.add_subcommand("vec", "cgraphs as vectors over GF(p)");
    vec->require_subcommand(1);
    auto* vec_add = vec->add_subcommand("add", "componentwise sum of two cgraph vectors");
    vec_add->add_option("file1", file1, "cgraph file")->required();
    vec_add->add_option("file2", file2, "cgraph file")->required();
    auto* vec_scale = vec->add_subcommand("scale", "scalar multiple of a cgraph vector");
    vec_scale->add_option("scalar", scalar, "scalar, reduced mod p")->required();
    vec_scale->add_option("file", file1, "cgraph file")->required();
    auto* vec_classify = vec->add_subcommand(
        "classify", "position of FILE2's vector relative to FILE1's: Subcgraph, Supercgraph, "
                    "Neither, or Both");
    vec_classify->add_option("file1", file1, "base cgraph file")->required();
    vec_classify->add_option("file2", file2, "compared cgraph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*canon) {
            std::cout << cgraph::canonical_code(load(file1)).str() << "\n";
        } else if (*iso) {
            cgraph::CGraph g = load(file1);
            cgraph::CGraph h = load(file2);
            auto witness = cgraph::cisomorphic(g, h);
            if (!witness) {
                std::cout << "ABSENT\n";
                return 1;
            }
            print_ints(witness->images());
        } else if (*complement) {
            cgraph::CGraph g = load(file1);
            cgraph::ColorPermutation pi(parse_int_list(perm_text));
            std::cout << cgraph::write_cgraph(cgraph::pi_complement(g, pi));
        } else if (*decompose) {
            cgraph::CGraph g = load(file1);
            check_nonwhite_color(color, g.prime());
            std::cout << cgraph::write_cgraph(
                cgraph::monochromatic_component(g, cgraph::FieldElement(color, g.modulus())));
        } else if (*components) {
            cgraph::CGraph g = load(file1);
            for (const auto& block : cgraph::components(g).blocks) print_ints(block);
        } else if (*kpath) {
            cgraph::CGraph g = load(file1);
            check_nonwhite_color(color, g.prime());
            check_vertex_arg(source, g.vertex_count());
            check_vertex_arg(target, g.vertex_count());
            auto path =
                cgraph::find_k_path(g, cgraph::FieldElement(color, g.modulus()), source, target);
            if (!path) {
                std::cout << "ABSENT\n";
                return 1;
            }
            print_ints(path->vertices);
        } else if (*jconnected) {
            cgraph::CGraph g = load(file1);
            check_nonwhite_color(color, g.prime());
            bool yes = cgraph::is_j_connected(g, cgraph::FieldElement(color, g.modulus()));
            std::cout << (yes ? "true" : "false") << "\n";
            if (!yes) return 1;
        } else if (*count) {
            std::cout << cgraph::count_unlabeled(n, cgraph::Modulus(p)) << "\n";
        } else if (*series) {
            std::cout << cgraph::configuration_series(n, cgraph::Modulus(p)).str();
        } else if (*cycle_index) {
            std::cout << cgraph::pair_group_cycle_index(n).str();
        } else if (*oracle) {
            std::cout << cgraph::burnside_oracle(n, cgraph::Modulus(p)) << "\n";
        } else if (*deck) {
            cgraph::CGraph g = load(file1);
            cgraph::Deck d = edges_flag ? cgraph::edge_deck(g) : cgraph::vertex_deck(g);
            for (const auto& card : d.cards) std::cout << card.str() << "\n";
        } else if (*recon) {
            auto mode = edges_flag ? cgraph::DeckMode::Edge : cgraph::DeckMode::Vertex;
            auto result = cgraph::conjecture_search(n, cgraph::Modulus(p), mode);
            for (const auto& c : result.classes) std::cout << "code " << c.str() << "\n";
            for (const auto& [a, b] : result.counterexamples) {
                auto ia = std::lower_bound(result.classes.begin(), result.classes.end(), a) -
                          result.classes.begin();
                auto ib = std::lower_bound(result.classes.begin(), result.classes.end(), b) -
                          result.classes.begin();
                if (ia > ib) std::swap(ia, ib);
                std::cout << "pair " << ia << " " << ib << "\n";
            }
            if (!result.counterexamples.empty()) return 1;
        } else if (*assign) {
            cgraph::AssignmentMatrix m = cgraph::read_matrix_file(file1);
            if (m.rows() != m.cols()) m = cgraph::pad_to_square(m);
            auto found = cgraph::find_assignments(m, all_flag ? INT_MAX : 1);
            if (found.empty()) {
                std::cout << "NONE\n";
                return 1;
            }
            for (std::size_t i = 0; i < found.size(); ++i) {
                if (i) std::cout << "\n";
                print_assignment(found[i], m.real_rows(), m.real_cols());
            }
        } else if (*plane) {
            auto pk = cgraph::build_projective_plane(q);
            if (verify_flag) {
                auto report = cgraph::verify_packing(pk);
                if (!report.pass) {
                    std::cout << "fail: " << report.violation << "\n";
                    return 1;
                }
                std::cout << "pass\n";
            } else {
                int prime = cgraph::smallest_prime_above(pk.point_count());
                cgraph::CGraph g = cgraph::packing_cgraph(pk, cgraph::Modulus(prime));
                std::cout << cgraph::write_cgraph(g, {"plane order=" + std::to_string(q)});
            }
        } else if (*triangles) {
            auto census = cgraph::triangle_census(load(file1));
            std::cout << census.total << " " << census.monochromatic << " " << census.rainbow
                      << " " << census.other << "\n";
        } else if (*vec) {
            if (*vec_add) {
                cgraph::CGraph g = load(file1);
                cgraph::CGraph h = load(file2);
                print_ints(cgraph::vector_add(cgraph::to_vector(g), cgraph::to_vector(h)).entries());
            } else if (*vec_scale) {
                cgraph::CGraph g = load(file1);
                auto result = cgraph::scalar_mul(cgraph::FieldElement(scalar, g.modulus()),
                                                 cgraph::to_vector(g));
                print_ints(result.entries());
            } else if (*vec_classify) {
                cgraph::CGraph g = load(file1);
                cgraph::CGraph w = load(file2);
                std::cout << cgraph::to_string(cgraph::classify_relative(cgraph::to_vector(g),
                                                                         cgraph::to_vector(w)))
                          << "\n";
            }
        }
    } catch (const cgraph::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cgraph::InvalidArgs& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cgraph::NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cgraph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
