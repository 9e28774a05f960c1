#pragma once

#include "braidlab/atom_pairs.hpp"
#include "braidlab/automorphism.hpp"
#include "braidlab/braid_word.hpp"
#include "braidlab/cabling.hpp"
#include "braidlab/characters.hpp"
#include "braidlab/error.hpp"
#include "braidlab/four_strand.hpp"
#include "braidlab/free_group.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/integer_matrix.hpp"
#include "braidlab/kernel_abelianization.hpp"
#include "braidlab/ledger.hpp"
#include "braidlab/matrix_groups.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/partition.hpp"
#include "braidlab/permutation.hpp"
#include "braidlab/polynomial.hpp"
#include "braidlab/presentation.hpp"
#include "braidlab/pure_braid.hpp"
#include "braidlab/s6_automorphism.hpp"
#include "braidlab/sliding.hpp"
