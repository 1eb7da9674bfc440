#include "catalog_data.hpp"

namespace g2theta::detail {

// Block grammar: "id (label)", optional "from" line, the first side indented
// four spaces, each further side opened by "  = ", optional "where" lines.

const std::string_view kThetaCatalog = R"catalog(
master (2-4)
    + [0000](alpha,beta) [0000](alpha',beta') [0000](y+y'+alpha,z+z'+beta) [0000](y-y'+alpha',z-z'+beta')
    + [0100](alpha,beta) [0100](alpha',beta') [0100](y+y'+alpha,z+z'+beta) [0100](y-y'+alpha',z-z'+beta')
    + [1000](alpha,beta) [1000](alpha',beta') [1000](y+y'+alpha,z+z'+beta) [1000](y-y'+alpha',z-z'+beta')
    + [1100](alpha,beta) [1100](alpha',beta') [1100](y+y'+alpha,z+z'+beta) [1100](y-y'+alpha',z-z'+beta')
  = + [0000](y+alpha+alpha',z+beta+beta') [0000](y,z) [0000](y'+alpha-alpha',z'+beta-beta') [0000](y',z')
    + [0100](y+alpha+alpha',z+beta+beta') [0100](y,z) [0100](y'+alpha-alpha',z'+beta-beta') [0100](y',z')
    + [1000](y+alpha+alpha',z+beta+beta') [1000](y,z) [1000](y'+alpha-alpha',z'+beta-beta') [1000](y',z')
    + [1100](y+alpha+alpha',z+beta+beta') [1100](y,z) [1100](y'+alpha-alpha',z'+beta-beta') [1100](y',z')

kossak-1 (2-5)
    + [0000](alpha,beta) [0011](0,0) [0000](y+y'+alpha,z+z'+beta) [0011](y-y',z-z')
  = + [0000](y+alpha,z+beta) [0011](y,z) [0000](y'+alpha,z'+beta) [0011](y',z')
    - [1000](y+alpha,z+beta) [1011](y,z) [1000](y'+alpha,z'+beta) [1011](y',z')
    - [0110](y+alpha,z+beta) [0101](y,z) [0110](y'+alpha,z'+beta) [0101](y',z')
    + [1110](y+alpha,z+beta) [1101](y,z) [1110](y'+alpha,z'+beta) [1101](y',z')

kossak-2 (2-6)
    + [0010](alpha,beta) [0001](0,0) [0000](y+y'+alpha,z+z'+beta) [0011](y-y',z-z')
  = + [0010](y+alpha,z+beta) [0001](y,z) [0000](y'+alpha,z'+beta) [0011](y',z')
    - [0110](y+alpha,z+beta) [0101](y,z) [0100](y'+alpha,z'+beta) [0111](y',z')
    + [0000](y+alpha,z+beta) [0011](y,z) [0010](y'+alpha,z'+beta) [0001](y',z')
    - [0100](y+alpha,z+beta) [0111](y,z) [0110](y'+alpha,z'+beta) [0101](y',z')
  where [0000](alpha,beta) = 0

kossak-3 (2-7)
    + [0001](alpha,beta) [0010](0,0) [0000](y+y'+alpha,z+z'+beta) [0011](y-y',z-z')
  = + [0001](y+alpha,z+beta) [0010](y,z) [0000](y'+alpha,z'+beta) [0011](y',z')
    - [1001](y+alpha,z+beta) [1010](y,z) [1000](y'+alpha,z'+beta) [1011](y',z')
    + [0000](y+alpha,z+beta) [0011](y,z) [0001](y'+alpha,z'+beta) [0010](y',z')
    - [1000](y+alpha,z+beta) [1011](y,z) [1001](y'+alpha,z'+beta) [1010](y',z')
  where [0000](alpha,beta) = 0

theta-add-1 (2-8)
  from kossak-1 alpha=1/2 beta=1/2
    + [0011]^2(0,0) [0011](y+y',z+z') [0011](y-y',z-z')
  = + [0011]^2(y,z) [0011]^2(y',z')
    - [1011]^2(y,z) [1011]^2(y',z')
    - [0101]^2(y,z) [0101]^2(y',z')
    + [1101]^2(y,z) [1101]^2(y',z')

theta-add-2 (2-9)
  from kossak-1 alpha=0 beta=1/2
    + [0001](0,0) [0011](0,0) [0001](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [0001](y,z) [0011](y',z') [0001](y',z')
    - [1011](y,z) [1001](y,z) [1011](y',z') [1001](y',z')
    - [0101](y,z) [0111](y,z) [0101](y',z') [0111](y',z')
    + [1101](y,z) [1111](y,z) [1101](y',z') [1111](y',z')

theta-add-3 (2-10)
  from kossak-1 alpha=1/2 beta=0
    + [0010](0,0) [0011](0,0) [0010](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [0010](y,z) [0011](y',z') [0010](y',z')
    - [1011](y,z) [1010](y,z) [1011](y',z') [1010](y',z')
    - [0101](y,z) [0100](y,z) [0101](y',z') [0100](y',z')
    + [1101](y,z) [1100](y,z) [1101](y',z') [1100](y',z')

theta-add-4 (2-11)
  from kossak-1 alpha=t1/2 beta=t12/2+1/2
    + [1001](0,0) [0011](0,0) [1001](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1001](y,z) [0011](y',z') [1001](y',z')
    - [1011](y,z) [0001](y,z) [1011](y',z') [0001](y',z')
    + [0101](y,z) [1111](y,z) [0101](y',z') [1111](y',z')
    - [1101](y,z) [0111](y,z) [1101](y',z') [0111](y',z')

theta-add-5 (2-12)
  from kossak-1 alpha=t12/2+1/2 beta=t2/2
    + [0110](0,0) [0011](0,0) [0110](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [0110](y,z) [0011](y',z') [0110](y',z')
    - [1011](y,z) [1110](y,z) [1011](y',z') [1110](y',z')
    - [0101](y,z) [0000](y,z) [0101](y',z') [0000](y',z')
    + [1101](y,z) [1000](y,z) [1101](y',z') [1000](y',z')

theta-add-6 (2-13)
  from kossak-1 alpha=t12/2 beta=t2/2
    + [0100](0,0) [0011](0,0) [0100](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [0100](y,z) [0011](y',z') [0100](y',z')
    - [1011](y,z) [1100](y,z) [1011](y',z') [1100](y',z')
    - [0101](y,z) [0010](y,z) [0101](y',z') [0010](y',z')
    + [1101](y,z) [1010](y,z) [1101](y',z') [1010](y',z')

theta-add-7 (2-14)
  from kossak-1 alpha=t1/2 beta=t12/2
    + [1000](0,0) [0011](0,0) [1000](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1000](y,z) [0011](y',z') [1000](y',z')
    - [1011](y,z) [0000](y,z) [1011](y',z') [0000](y',z')
    + [0101](y,z) [1110](y,z) [0101](y',z') [1110](y',z')
    - [1101](y,z) [0110](y,z) [1101](y',z') [0110](y',z')

theta-add-8 (2-15)
  from kossak-1 alpha=t1/2+t12/2 beta=t2/2+t12/2
    + [1100](0,0) [0011](0,0) [1100](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1100](y,z) [0011](y',z') [1100](y',z')
    - [1011](y,z) [0100](y,z) [1011](y',z') [0100](y',z')
    + [0101](y,z) [1010](y,z) [0101](y',z') [1010](y',z')
    - [1101](y,z) [0010](y,z) [1101](y',z') [0010](y',z')

theta-add-9 (2-16)
  from kossak-1 alpha=t1/2+t12/2+1/2 beta=t2/2+t12/2+1/2
    + [1111](0,0) [0011](0,0) [1111](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1111](y,z) [0011](y',z') [1111](y',z')
    - [1011](y,z) [0111](y,z) [1011](y',z') [0111](y',z')
    + [0101](y,z) [1001](y,z) [0101](y',z') [1001](y',z')
    - [1101](y,z) [0001](y,z) [1101](y',z') [0001](y',z')

theta-add-10 (2-17)
  from kossak-1 alpha=0 beta=0
    + [0000](0,0) [0011](0,0) [0000](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [0000](y,z) [0011](y',z') [0000](y',z')
    - [1011](y,z) [1000](y,z) [1011](y',z') [1000](y',z')
    - [0101](y,z) [0110](y,z) [0101](y',z') [0110](y',z')
    + [1101](y,z) [1110](y,z) [1101](y',z') [1110](y',z')

theta-add-11 (2-18)
  from kossak-2 alpha=t1/2+1/2 beta=t12/2+1/2
    + [1001](0,0) [0001](0,0) [1011](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1011](y,z) [0001](y',z') [1001](y',z')
    - [0111](y,z) [1111](y,z) [0101](y',z') [1101](y',z')
    + [0001](y,z) [1001](y,z) [0011](y',z') [1011](y',z')
    - [0101](y,z) [1101](y,z) [0111](y',z') [1111](y',z')

theta-add-12 (2-19)
  from kossak-2 alpha=t1/2+1/2 beta=t12/2
    + [1000](0,0) [0001](0,0) [1010](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1010](y,z) [0001](y',z') [1000](y',z')
    - [0111](y,z) [1110](y,z) [0101](y',z') [1100](y',z')
    + [0001](y,z) [1000](y,z) [0011](y',z') [1010](y',z')
    - [0101](y,z) [1100](y,z) [0111](y',z') [1110](y',z')

theta-add-13 (2-20)
  from kossak-2 alpha=t1/2+t12/2+1/2 beta=t2/2+t12/2
    + [1100](0,0) [0001](0,0) [1110](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1110](y,z) [0001](y',z') [1100](y',z')
    - [0111](y,z) [1010](y,z) [0101](y',z') [1000](y',z')
    + [0001](y,z) [1100](y,z) [0011](y',z') [1110](y',z')
    - [0101](y,z) [1000](y,z) [0111](y',z') [1010](y',z')

theta-add-14 (2-21)
  from kossak-3 alpha=t12/2+1/2 beta=t2/2+1/2
    + [0110](0,0) [0010](0,0) [0111](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [0111](y,z) [0010](y',z') [0110](y',z')
    - [1011](y,z) [1111](y,z) [1010](y',z') [1110](y',z')
    + [0010](y,z) [0110](y,z) [0011](y',z') [0111](y',z')
    - [1010](y,z) [1110](y,z) [1011](y',z') [1111](y',z')

theta-add-15 (2-22)
  from kossak-3 alpha=t12/2 beta=t2/2+1/2
    + [0100](0,0) [0010](0,0) [0101](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [0101](y,z) [0010](y',z') [0100](y',z')
    - [1011](y,z) [1101](y,z) [1010](y',z') [1100](y',z')
    + [0010](y,z) [0100](y,z) [0011](y',z') [0101](y',z')
    - [1010](y,z) [1100](y,z) [1011](y',z') [1101](y',z')

theta-add-16 (2-23)
  from kossak-3 alpha=t1/2+t12/2 beta=t2/2+t12/2+1/2
    + [1100](0,0) [0010](0,0) [1101](y+y',z+z') [0011](y-y',z-z')
  = + [0011](y,z) [1101](y,z) [0010](y',z') [1100](y',z')
    - [1011](y,z) [0101](y,z) [1010](y',z') [0100](y',z')
    + [0010](y,z) [1100](y,z) [0011](y',z') [1101](y',z')
    - [1010](y,z) [0100](y,z) [1011](y',z') [0101](y',z')

appendix-A1 (A-1)
    + [0000](alpha,beta) [0000](1/2,1/2) [0000](y+y'+alpha,z+z'+beta) [0000](y-y'+1/2,z-z'+1/2)
    + [1100](alpha,beta) [1100](1/2,1/2) [1100](y+y'+alpha,z+z'+beta) [1100](y-y'+1/2,z-z'+1/2)
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    - [1000](y+alpha+1/2,z+beta+1/2) [1000](y,z) [1000](y'+alpha+1/2,z'+beta+1/2) [1000](y',z')
    + [1100](y+alpha+1/2,z+beta+1/2) [1100](y,z) [1100](y'+alpha+1/2,z'+beta+1/2) [1100](y',z')

appendix-A2 (A-2)
    + [0000](alpha,beta) [0000](1/2,1/2) [0000](y+y'+alpha,z+z'+beta) [0000](y-y'+1/2,z-z'+1/2)
    - [1100](alpha,beta) [1100](1/2,1/2) [1100](y+y'+alpha,z+z'+beta) [1100](y-y'+1/2,z-z'+1/2)
  = + [0001](y+alpha+1/2,z+beta+1/2) [0001](y,z) [0001](y'+alpha+1/2,z'+beta+1/2) [0001](y',z')
    - [0101](y+alpha+1/2,z+beta+1/2) [0101](y,z) [0101](y'+alpha+1/2,z'+beta+1/2) [0101](y',z')
    - [1001](y+alpha+1/2,z+beta+1/2) [1001](y,z) [1001](y'+alpha+1/2,z'+beta+1/2) [1001](y',z')
    + [1101](y+alpha+1/2,z+beta+1/2) [1101](y,z) [1101](y'+alpha+1/2,z'+beta+1/2) [1101](y',z')

appendix-A3 (A-3)
    + 2 [0000](alpha,beta) [0000](1/2,1/2) [0000](y+y'+alpha,z+z'+beta) [0000](y-y'+1/2,z-z'+1/2)
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    - [1000](y+alpha+1/2,z+beta+1/2) [1000](y,z) [1000](y'+alpha+1/2,z'+beta+1/2) [1000](y',z')
    + [1100](y+alpha+1/2,z+beta+1/2) [1100](y,z) [1100](y'+alpha+1/2,z'+beta+1/2) [1100](y',z')
    + [0001](y+alpha+1/2,z+beta+1/2) [0001](y,z) [0001](y'+alpha+1/2,z'+beta+1/2) [0001](y',z')
    - [0101](y+alpha+1/2,z+beta+1/2) [0101](y,z) [0101](y'+alpha+1/2,z'+beta+1/2) [0101](y',z')
    - [1001](y+alpha+1/2,z+beta+1/2) [1001](y,z) [1001](y'+alpha+1/2,z'+beta+1/2) [1001](y',z')
    + [1101](y+alpha+1/2,z+beta+1/2) [1101](y,z) [1101](y'+alpha+1/2,z'+beta+1/2) [1101](y',z')

appendix-A4 (A-4)
    + [0000](alpha,beta) [0000](0,1/2) [0000](y+y'+alpha,z+z'+beta) [0000](y-y',z-z'+1/2)
    + [1000](alpha,beta) [1000](0,1/2) [1000](y+y'+alpha,z+z'+beta) [1000](y-y',z-z'+1/2)
  = + [0000](y+alpha,z+beta+1/2) [0000](y,z) [0000](y'+alpha,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha,z+beta+1/2) [0100](y,z) [0100](y'+alpha,z'+beta+1/2) [0100](y',z')
    + [1000](y+alpha,z+beta+1/2) [1000](y,z) [1000](y'+alpha,z'+beta+1/2) [1000](y',z')
    - [1100](y+alpha,z+beta+1/2) [1100](y,z) [1100](y'+alpha,z'+beta+1/2) [1100](y',z')

appendix-A5 (A-5)
    + [0000](alpha,beta) [0000](0,1/2) [0000](y+y'+alpha,z+z'+beta) [0000](y-y',z-z'+1/2)
    + [1000](alpha,beta) [1000](0,1/2) [1000](y+y'+alpha,z+z'+beta) [1000](y-y',z-z'+1/2)
  = + [0001](y+alpha,z+beta+1/2) [0001](y,z) [0001](y'+alpha,z'+beta+1/2) [0001](y',z')
    - [0101](y+alpha,z+beta+1/2) [0101](y,z) [0101](y'+alpha,z'+beta+1/2) [0101](y',z')
    + [1001](y+alpha,z+beta+1/2) [1001](y,z) [1001](y'+alpha,z'+beta+1/2) [1001](y',z')
    - [1101](y+alpha,z+beta+1/2) [1101](y,z) [1101](y'+alpha,z'+beta+1/2) [1101](y',z')

appendix-A6 (A-6)
    0
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    + [1000](y+alpha+1/2,z+beta+1/2) [1000](y,z) [1000](y'+alpha+1/2,z'+beta+1/2) [1000](y',z')
    - [1100](y+alpha+1/2,z+beta+1/2) [1100](y,z) [1100](y'+alpha+1/2,z'+beta+1/2) [1100](y',z')
    - [0001](y+alpha+1/2,z+beta+1/2) [0001](y,z) [0001](y'+alpha+1/2,z'+beta+1/2) [0001](y',z')
    + [0101](y+alpha+1/2,z+beta+1/2) [0101](y,z) [0101](y'+alpha+1/2,z'+beta+1/2) [0101](y',z')
    - [1001](y+alpha+1/2,z+beta+1/2) [1001](y,z) [1001](y'+alpha+1/2,z'+beta+1/2) [1001](y',z')
    + [1101](y+alpha+1/2,z+beta+1/2) [1101](y,z) [1101](y'+alpha+1/2,z'+beta+1/2) [1101](y',z')

appendix-A7 (A-7)
    + [0000](alpha,beta) [0011](0,0) [0000](y+y'+alpha,z+z'+beta) [0011](y-y',z-z')
  = + [0011](y+alpha,z+beta) [0000](y,z) [0011](y'+alpha,z'+beta) [0000](y',z')
    - [0111](y+alpha,z+beta) [0100](y,z) [0111](y'+alpha,z'+beta) [0100](y',z')
    - [1010](y+alpha,z+beta) [1001](y,z) [1010](y'+alpha,z'+beta) [1001](y',z')
    + [1110](y+alpha,z+beta) [1101](y,z) [1110](y'+alpha,z'+beta) [1101](y',z')

appendix-A8 (A-8)
    + [0000](alpha,beta) [0011](0,0) [0000](y+y'+alpha,z+z'+beta) [0011](y-y',z-z')
  = + [0000](y+alpha,z+beta) [0011](y,z) [0000](y'+alpha,z'+beta) [0011](y',z')
    - [0100](y+alpha,z+beta) [0111](y,z) [0100](y'+alpha,z'+beta) [0111](y',z')
    - [1001](y+alpha,z+beta) [1010](y,z) [1001](y'+alpha,z'+beta) [1010](y',z')
    + [1101](y+alpha,z+beta) [1110](y,z) [1101](y'+alpha,z'+beta) [1110](y',z')
  = + [0000](y+alpha,z+beta) [0011](y,z) [0000](y'+alpha,z'+beta) [0011](y',z')
    - [1000](y+alpha,z+beta) [1011](y,z) [1000](y'+alpha,z'+beta) [1011](y',z')
    - [0110](y+alpha,z+beta) [0101](y,z) [0110](y'+alpha,z'+beta) [0101](y',z')
    + [1110](y+alpha,z+beta) [1101](y,z) [1110](y'+alpha,z'+beta) [1101](y',z')

appendix-A9 (A-9)
    + [1100](alpha,beta) [1100](1/2,1/2) [1100](y+y'+alpha,z+z'+beta) [1100](y-y'+1/2,z-z'+1/2)
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    - [1000](y+alpha+1/2,z+beta+1/2) [1000](y,z) [1000](y'+alpha+1/2,z'+beta+1/2) [1000](y',z')
    + [1100](y+alpha+1/2,z+beta+1/2) [1100](y,z) [1100](y'+alpha+1/2,z'+beta+1/2) [1100](y',z')
  = - [0001](y+alpha+1/2,z+beta+1/2) [0001](y,z) [0001](y'+alpha+1/2,z'+beta+1/2) [0001](y',z')
    + [0101](y+alpha+1/2,z+beta+1/2) [0101](y,z) [0101](y'+alpha+1/2,z'+beta+1/2) [0101](y',z')
    + [1001](y+alpha+1/2,z+beta+1/2) [1001](y,z) [1001](y'+alpha+1/2,z'+beta+1/2) [1001](y',z')
    - [1101](y+alpha+1/2,z+beta+1/2) [1101](y,z) [1101](y'+alpha+1/2,z'+beta+1/2) [1101](y',z')
  where [0000](alpha,beta) = 0

appendix-A10 (A-10)
    0
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    - [1000](y+alpha+1/2,z+beta+1/2) [1000](y,z) [1000](y'+alpha+1/2,z'+beta+1/2) [1000](y',z')
    + [1100](y+alpha+1/2,z+beta+1/2) [1100](y,z) [1100](y'+alpha+1/2,z'+beta+1/2) [1100](y',z')
    + [0010](y+alpha+1/2,z+beta+1/2) [0010](y,z) [0010](y'+alpha+1/2,z'+beta+1/2) [0010](y',z')
    - [1010](y+alpha+1/2,z+beta+1/2) [1010](y,z) [1010](y'+alpha+1/2,z'+beta+1/2) [1010](y',z')
    - [0110](y+alpha+1/2,z+beta+1/2) [0110](y,z) [0110](y'+alpha+1/2,z'+beta+1/2) [0110](y',z')
    + [1110](y+alpha+1/2,z+beta+1/2) [1110](y,z) [1110](y'+alpha+1/2,z'+beta+1/2) [1110](y',z')
  where [0000](alpha,beta) = 0

appendix-A11 (A-11)
    + [0000](alpha,beta) [0000](0,1/2) [0000](y+y'+alpha,z+z'+beta) [0000](y-y',z-z'+1/2)
    - [1000](alpha,beta) [1000](0,1/2) [1000](y+y'+alpha,z+z'+beta) [1000](y-y',z-z'+1/2)
  = + [0010](y+alpha,z+beta+1/2) [0010](y,z) [0010](y'+alpha,z'+beta+1/2) [0010](y',z')
    - [0110](y+alpha,z+beta+1/2) [0110](y,z) [0110](y'+alpha,z'+beta+1/2) [0110](y',z')
    + [1010](y+alpha,z+beta+1/2) [1010](y,z) [1010](y'+alpha,z'+beta+1/2) [1010](y',z')
    - [1110](y+alpha,z+beta+1/2) [1110](y,z) [1110](y'+alpha,z'+beta+1/2) [1110](y',z')

appendix-A12 (A-12)
    + 2 [0000](alpha+1/2,beta) [0000](0,1/2) [0000](y+y'+alpha+1/2,z+z'+beta) [0000](y-y',z-z'+1/2)
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    + [1000](y+alpha+1/2,z+beta+1/2) [1000](y,z) [1000](y'+alpha+1/2,z'+beta+1/2) [1000](y',z')
    - [1100](y+alpha+1/2,z+beta+1/2) [1100](y,z) [1100](y'+alpha+1/2,z'+beta+1/2) [1100](y',z')
    + [0010](y+alpha+1/2,z+beta+1/2) [0010](y,z) [0010](y'+alpha+1/2,z'+beta+1/2) [0010](y',z')
    - [0110](y+alpha+1/2,z+beta+1/2) [0110](y,z) [0110](y'+alpha+1/2,z'+beta+1/2) [0110](y',z')
    + [1010](y+alpha+1/2,z+beta+1/2) [1010](y,z) [1010](y'+alpha+1/2,z'+beta+1/2) [1010](y',z')
    - [1110](y+alpha+1/2,z+beta+1/2) [1110](y,z) [1110](y'+alpha+1/2,z'+beta+1/2) [1110](y',z')

appendix-A13 (A-13)
    + [0000](alpha+1/2,beta) [0000](0,1/2) [0000](y+y'+alpha+1/2,z+z'+beta) [0000](y-y',z-z'+1/2)
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    + [0010](y+alpha+1/2,z+beta+1/2) [0010](y,z) [0010](y'+alpha+1/2,z'+beta+1/2) [0010](y',z')
    - [0110](y+alpha+1/2,z+beta+1/2) [0110](y,z) [0110](y'+alpha+1/2,z'+beta+1/2) [0110](y',z')
  where [0000](alpha,beta) = 0

appendix-A14 (A-14)
    + [0010](alpha,beta) [0001](0,0) [0000](y+y'+alpha,z+z'+beta) [0011](y-y',z-z')
  = + [0010](y+alpha,z+beta) [0001](y,z) [0000](y'+alpha,z'+beta) [0011](y',z')
    - [0110](y+alpha,z+beta) [0101](y,z) [0100](y'+alpha,z'+beta) [0111](y',z')
    + [0000](y+alpha,z+beta) [0011](y,z) [0010](y'+alpha,z'+beta) [0001](y',z')
    - [0100](y+alpha,z+beta) [0111](y,z) [0110](y'+alpha,z'+beta) [0101](y',z')
  where [0000](alpha,beta) = 0

appendix-A15 (A-15)
    + [0001](alpha,beta) [0010](0,0) [0000](y+y'+alpha,z+z'+beta) [0011](y-y',z-z')
  = + [0001](y+alpha,z+beta) [0010](y,z) [0000](y'+alpha,z'+beta) [0011](y',z')
    - [1001](y+alpha,z+beta) [1010](y,z) [1000](y'+alpha,z'+beta) [1011](y',z')
    + [0000](y+alpha,z+beta) [0011](y,z) [0001](y'+alpha,z'+beta) [0010](y',z')
    - [1000](y+alpha,z+beta) [1011](y,z) [1001](y'+alpha,z'+beta) [1010](y',z')
  where [0000](alpha,beta) = 0
)catalog";

const std::string_view kPrintedCatalog = R"catalog(
theta-add-1 (2-8)
  from kossak-1 alpha=1/2 beta=1/2
    + [0011]^2(0,0) [0011](y+y',z+z') [0011](y-y',z-z')
  = + [0011]^2(y,z) [0011]^2(y',z')
    - [1011]^2(y,z) [1011]^2(y',z')
    - [0101]^2(y,z) [0101]^2(y',z')
    + [1101]^2(y,z) [1101](y',z')

appendix-A12 (A-12)
    + 2 [0000](alpha+1/2,beta) [0000](0,1/2) [0000](y+y'+alpha+1/2,z+z'+beta) [0000](y-y',z-z'+1/2)
  = + [0000](y+alpha+1/2,z+beta+1/2) [0000](y,z) [0000](y'+alpha+1/2,z'+beta+1/2) [0000](y',z')
    - [0100](y+alpha+1/2,z+beta+1/2) [0100](y,z) [0100](y'+alpha+1/2,z'+beta+1/2) [0100](y',z')
    + [1000](y+alpha+1/2,z+beta+1/2) [1000](y,z) [1000](y'+alpha+1/2,z'+beta+1/2) [1000](y',z')
    - [1100](y+alpha+1/2,z+beta+1/2) [1100](y,z) [1100](y'+alpha+1/2,z'+beta+1/2) [1100](y',z')
    + [0010](y+alpha+1/2,z+beta+1/2) [0010](y,z) [0010](y'+alpha+1/2,z'+beta+1/2) [0010](y',z')
    - [0110](y+alpha,z+beta+1) [0110](y,z) [0110](y'+alpha+1/2,z'+beta+1/2) [0110](y',z')
    + [1010](y+alpha+1/2,z+beta+1/2) [1010](y,z) [1010](y'+alpha+1/2,z'+beta+1/2) [1010](y',z')
    - [1110](y+alpha+1/2,z+beta+1/2) [1110](y,z) [1110](y'+alpha+1/2,z'+beta+1/2) [1110](y',z')
)catalog";

const std::string_view kFCatalog = R"catalog(
f-add-1 (3-2) [0001]
    + [0001](y,z) [0001](y',z')
    - [1011](y,z) [1001](y,z) [1011](y',z') [1001](y',z')
    - [0101](y,z) [0111](y,z) [0101](y',z') [0111](y',z')
    + [1101](y,z) [1111](y,z) [1101](y',z') [1111](y',z')
  / [0001]

f-add-2 (3-3) [0010]
    + [0010](y,z) [0010](y',z')
    - [1011](y,z) [1010](y,z) [1011](y',z') [1010](y',z')
    - [0101](y,z) [0100](y,z) [0101](y',z') [0100](y',z')
    + [1101](y,z) [1100](y,z) [1101](y',z') [1100](y',z')
  / [0010]

f-add-3 (3-4) [1001]
    + [1001](y,z) [1001](y',z')
    - [1011](y,z) [0001](y,z) [1011](y',z') [0001](y',z')
    + [0101](y,z) [1111](y,z) [0101](y',z') [1111](y',z')
    - [1101](y,z) [0111](y,z) [1101](y',z') [0111](y',z')
  / [1001]

f-add-4 (3-5) [0110]
    + [0110](y,z) [0110](y',z')
    - [1011](y,z) [1110](y,z) [1011](y',z') [1110](y',z')
    - [0101](y,z) [0000](y,z) [0101](y',z') [0000](y',z')
    + [1101](y,z) [1000](y,z) [1101](y',z') [1000](y',z')
  / [0110]

f-add-5 (3-6) [0100]
    + [0100](y,z) [0100](y',z')
    - [1011](y,z) [1100](y,z) [1011](y',z') [1100](y',z')
    - [0101](y,z) [0010](y,z) [0101](y',z') [0010](y',z')
    + [1101](y,z) [1010](y,z) [1101](y',z') [1010](y',z')
  / [0100]

f-add-6 (3-7) [1000]
    + [1000](y,z) [1000](y',z')
    - [1011](y,z) [0000](y,z) [1011](y',z') [0000](y',z')
    + [0101](y,z) [1110](y,z) [0101](y',z') [1110](y',z')
    - [1101](y,z) [0110](y,z) [1101](y',z') [0110](y',z')
  / [1000]

f-add-7 (3-8) [1100]
    + [1100](y,z) [1100](y',z')
    - [1011](y,z) [0100](y,z) [1011](y',z') [0100](y',z')
    + [0101](y,z) [1010](y,z) [0101](y',z') [1010](y',z')
    - [1101](y,z) [0010](y,z) [1101](y',z') [0010](y',z')
  / [1100]

f-add-8 (3-9) [1111]
    + [1111](y,z) [1111](y',z')
    - [1011](y,z) [0111](y,z) [1011](y',z') [0111](y',z')
    + [0101](y,z) [1001](y,z) [0101](y',z') [1001](y',z')
    - [1101](y,z) [0001](y,z) [1101](y',z') [0001](y',z')
  / [1111]

f-add-9 (3-10) [0000]
    + [0000](y,z) [0000](y',z')
    - [1011](y,z) [1000](y,z) [1011](y',z') [1000](y',z')
    - [0101](y,z) [0110](y,z) [0101](y',z') [0110](y',z')
    + [1101](y,z) [1110](y,z) [1101](y',z') [1110](y',z')
  / [0000]

f-add-10 (3-11) [1011]
    + [1011](y,z) [0001](y',z') [1001](y',z')
    - [0111](y,z) [1111](y,z) [0101](y',z') [1101](y',z')
    + [0001](y,z) [1001](y,z) [1011](y',z')
    - [0101](y,z) [1101](y,z) [0111](y',z') [1111](y',z')
  / [1001] [0001]

f-add-11 (3-12) [1010]
    + [1010](y,z) [0001](y',z') [1000](y',z')
    - [0111](y,z) [1110](y,z) [0101](y',z') [1100](y',z')
    + [0001](y,z) [1000](y,z) [1010](y',z')
    - [0101](y,z) [1100](y,z) [0111](y',z') [1110](y',z')
  / [1000] [0001]

f-add-12 (3-13) [1110]
    + [1110](y,z) [0001](y',z') [1100](y',z')
    - [0111](y,z) [1010](y,z) [0101](y',z') [1000](y',z')
    + [0001](y,z) [1100](y,z) [1110](y',z')
    - [0101](y,z) [1000](y,z) [0111](y',z') [1010](y',z')
  / [1100] [0001]

f-add-13 (3-14) [0111]
    + [0111](y,z) [0010](y',z') [0110](y',z')
    - [1011](y,z) [1111](y,z) [1010](y',z') [1110](y',z')
    + [0010](y,z) [0110](y,z) [0111](y',z')
    - [1010](y,z) [1110](y,z) [1011](y',z') [1111](y',z')
  / [0110] [0010]

f-add-14 (3-15) [0101]
    + [0101](y,z) [0010](y',z') [0100](y',z')
    - [1011](y,z) [1101](y,z) [1010](y',z') [1100](y',z')
    + [0010](y,z) [0100](y,z) [0101](y',z')
    - [1010](y,z) [1100](y,z) [1011](y',z') [1101](y',z')
  / [0100] [0010]

f-add-15 (3-16) [1101]
    + [1101](y,z) [0010](y',z') [1100](y',z')
    - [1011](y,z) [0101](y,z) [1010](y',z') [0100](y',z')
    + [0010](y,z) [1100](y,z) [1101](y',z')
    - [1010](y,z) [0100](y,z) [1011](y',z') [0101](y',z')
  / [1100] [0010]
)catalog";

}  // namespace g2theta::detail
