#pragma once

namespace rhokit {

// Resource guards for the exponential parts of the engine.
struct EngineLimits {
    // Largest block_count^|V(G)| the plain enumeration path will walk.
    double enumeration_cap = 1e8;
    // Vertex elimination is used when a greedy order of at most this width exists.
    int max_elimination_width = 4;
    // Vertex cap for subset brute force (delta index, independence number).
    int subset_vertex_cap = 26;
    // Cap on homomorphisms visited by the blowup bound.
    double homomorphism_visit_cap = 2e6;

    // Defaults, with RHOKIT_ENUM_CAP (a positive number) overriding enumeration_cap.
    static EngineLimits defaults();
};

}  // namespace rhokit
