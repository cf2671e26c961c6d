#include "hermring/suv_tables.hpp"
#include <cstring>
namespace hermring {
namespace {
constexpr SuvTerm kH20[] = {{1,2,0,0,0,0},{32,1,1,1,0,0},{4,0,2,1,0,0},{768,1,1,2,0,0},{384,0,2,2,0,0},{12288,0,2,3,0,0},{147456,0,2,4,0,0},{-24,1,0,0,0,1},{-4,0,1,0,0,1},{-384,0,1,1,0,1},{-9216,0,1,2,0,1},{144,0,0,0,0,2}};
constexpr SuvTerm kK22[] = {{1,2,0,0,0,0},{8,1,1,1,0,0},{-2,0,2,1,0,0},{384,1,1,2,0,0},{-192,0,2,2,0,0},{-3072,0,2,3,0,0},{24,0,2,0,1,0},{-12,1,0,0,0,1},{2,0,1,0,0,1},{96,0,1,1,0,1}};
constexpr SuvTerm kH24[] = {{-2,2,0,1,0,0},{-1,1,1,1,0,0},{-96,1,1,2,0,0},{-8,0,2,2,0,0},{-1536,1,1,3,0,0},{-896,0,2,3,0,0},{-30720,0,2,4,0,0},{-294912,0,2,5,0,0},{12,1,1,0,1,0},{2,0,2,0,1,0},{192,0,2,1,1,0},{4608,0,2,2,1,0},{1,1,0,0,0,1},{48,1,0,1,0,1},{12,0,1,1,0,1},{1152,0,1,2,0,1},{18432,0,1,3,0,1},{-144,0,1,0,1,1},{-6,0,0,0,0,2},{-288,0,0,1,0,2}};
constexpr SuvTerm kK26[] = {{-2,2,0,1,0,0},{-1,1,1,1,0,0},{-96,1,1,2,0,0},{-8,0,2,2,0,0},{-3072,1,1,3,0,0},{-1280,0,2,3,0,0},{-61440,0,2,4,0,0},{-884736,0,2,5,0,0},{-72,2,0,0,1,0},{-36,1,1,0,1,0},{-4,0,2,0,1,0},{-2304,1,1,1,1,0},{-480,0,2,1,1,0},{-55296,1,1,2,1,0},{-27648,0,2,2,1,0},{-884736,0,2,3,1,0},{-10616832,0,2,4,1,0},{1,1,0,0,0,1},{96,1,0,1,0,1},{24,0,1,1,0,1},{2304,0,1,2,0,1},{55296,0,1,3,0,1},{1728,1,0,0,1,1},{288,0,1,0,1,1},{27648,0,1,1,1,1},{663552,0,1,2,1,1},{-12,0,0,0,0,2},{-864,0,0,1,0,2},{-10368,0,0,0,1,2}};
constexpr SuvTerm kH28[] = {{-48,1,2,0,0,0},{16,2,0,2,0,0},{8,1,1,2,0,0},{1,0,2,2,0,0},{640,1,1,3,0,0},{192,0,2,3,0,0},{12288,1,1,4,0,0},{12288,0,2,4,0,0},{294912,0,2,5,0,0},{2359296,0,2,6,0,0},{-12,2,0,0,1,0},{-4,1,1,0,1,0},{-288,1,1,1,1,0},{-24,0,2,1,1,0},{-4608,1,1,2,1,0},{-2304,0,2,2,1,0},{-36864,0,2,3,1,0},{144,0,2,0,2,0},{-4,1,0,1,0,1},{-2,0,1,1,0,1},{-384,1,0,2,0,1},{-288,0,1,2,0,1},{-12288,0,1,3,0,1},{-147456,0,1,4,0,1},{144,1,0,0,1,1},{24,0,1,0,1,1},{1152,0,1,1,1,1},{1,0,0,0,0,2},{96,0,0,1,0,2},{2304,0,0,2,0,2}};
constexpr SuvTerm kI28[] = {{-2,2,0,1,0,0},{-1,1,1,1,0,0},{-192,2,0,2,0,0},{-192,1,1,2,0,0},{-16,0,2,2,0,0},{-9984,1,1,3,0,0},{-2560,0,2,3,0,0},{-147456,1,1,4,0,0},{-147456,0,2,4,0,0},{-3538944,0,2,5,0,0},{-28311552,0,2,6,0,0},{72,2,0,0,1,0},{36,1,1,0,1,0},{4,0,2,0,1,0},{2304,1,1,1,1,0},{576,0,2,1,1,0},{27648,1,1,2,1,0},{27648,0,2,2,1,0},{442368,0,2,3,1,0},{1,1,0,0,0,1},{120,1,0,1,0,1},{24,0,1,1,0,1},{4608,1,0,2,0,1},{3456,0,1,2,0,1},{147456,0,1,3,0,1},{1769472,0,1,4,0,1},{-864,1,0,0,1,1},{-288,0,1,0,1,1},{-13824,0,1,1,1,1},{-12,0,0,0,0,2},{-1152,0,0,1,0,2},{-27648,0,0,2,0,2}};
constexpr SuvTerm kK30[] = {{288,2,1,0,0,0},{48,1,2,0,0,0},{4608,1,2,1,0,0},{-8,2,0,2,0,0},{2,1,1,2,0,0},{1,0,2,2,0,0},{110592,1,2,2,0,0},{256,1,1,3,0,0},{192,0,2,3,0,0},{6144,1,1,4,0,0},{13056,0,2,4,0,0},{368640,0,2,5,0,0},{3538944,0,2,6,0,0},{12,2,0,0,1,0},{2,1,1,0,1,0},{288,2,0,1,1,0},{240,1,1,1,1,0},{13824,1,1,2,1,0},{1152,0,2,2,1,0},{221184,1,1,3,1,0},{129024,0,2,3,1,0},{4423680,0,2,4,1,0},{42467328,0,2,5,1,0},{-864,1,1,0,2,0},{-144,0,2,0,2,0},{-13824,0,2,1,2,0},{-331776,0,2,2,2,0},{-3456,1,1,0,0,1},{-4,1,0,1,0,1},{-2,0,1,1,0,1},{-192,1,0,2,0,1},{-312,0,1,2,0,1},{-15360,0,1,3,0,1},{-221184,0,1,4,0,1},{-144,1,0,0,1,1},{-6912,1,0,1,1,1},{-1728,0,1,1,1,1},{-165888,0,1,2,1,1},{-2654208,0,1,3,1,1},{10368,0,1,0,2,1},{1,0,0,0,0,2},{120,0,0,1,0,2},{3456,0,0,2,0,2},{864,0,0,0,1,2},{41472,0,0,1,1,2}};
constexpr SuvTerm kL30[] = {{1,3,0,0,0,0},{48,2,1,1,0,0},{8,1,2,1,0,0},{1,0,3,1,0,0},{1152,2,1,2,0,0},{960,1,2,2,0,0},{160,0,3,2,0,0},{36864,1,2,3,0,0},{10240,0,3,3,0,0},{442368,1,2,4,0,0},{368640,0,3,4,0,0},{7077888,0,3,5,0,0},{56623104,0,3,6,0,0},{-4,0,3,0,1,0},{-36,2,0,0,0,1},{-6,1,1,0,0,1},{-1,0,2,0,0,1},{-1152,1,1,1,0,1},{-192,0,2,1,0,1},{-27648,1,1,2,0,1},{-13824,0,2,2,0,1},{-442368,0,2,3,0,1},{-5308416,0,2,4,0,1},{432,1,0,0,0,2},{72,0,1,0,0,2},{6912,0,1,1,0,2},{165888,0,1,2,0,2},{-1728,0,0,0,0,3}};
constexpr SuvTerm kK34[] = {{-2,3,0,1,0,0},{-1,2,1,1,0,0},{-128,2,1,2,0,0},{-24,1,2,2,0,0},{-2304,2,1,3,0,0},{-2560,1,2,3,0,0},{-64,0,3,3,0,0},{-92160,1,2,4,0,0},{-12288,0,3,4,0,0},{-884736,1,2,5,0,0},{-737280,0,3,5,0,0},{-16515072,0,3,6,0,0},{-113246208,0,3,7,0,0},{24,2,1,0,1,0},{10,1,2,0,1,0},{1,0,3,0,1,0},{768,1,2,1,1,0},{144,0,3,1,1,0},{18432,1,2,2,1,0},{9216,0,3,2,1,0},{294912,0,3,3,1,0},{3538944,0,3,4,1,0},{1,2,0,0,0,1},{72,2,0,1,0,1},{32,1,1,1,0,1},{-2,0,2,1,0,1},{3456,1,1,2,0,1},{96,0,2,2,0,1},{55296,1,1,3,0,1},{27648,0,2,3,0,1},{1105920,0,2,4,0,1},{10616832,0,2,5,0,1},{-576,1,1,0,1,1},{-96,0,2,0,1,1},{-9216,0,2,1,1,1},{-221184,0,2,2,1,1},{-18,1,0,0,0,2},{1,0,1,0,0,2},{-864,1,0,1,0,2},{-144,0,1,1,0,2},{-20736,0,1,2,0,2},{-331776,0,1,3,0,2},{3456,0,1,0,1,2},{72,0,0,0,0,3},{3456,0,0,1,0,3}};
constexpr SuvTerm kH36[] = {{-37,1,3,0,0,0},{16,2,1,2,0,0},{8,1,2,2,0,0},{1,0,3,2,0,0},{128,2,1,3,0,0},{704,1,2,3,0,0},{192,0,3,3,0,0},{17408,1,2,4,0,0},{12800,0,3,4,0,0},{98304,1,2,5,0,0},{352256,0,3,5,0,0},{4194304,0,3,6,0,0},{18874368,0,3,7,0,0},{4,3,0,0,1,0},{-8,2,1,0,1,0},{-3,1,2,0,1,0},{192,2,1,1,1,0},{-176,1,2,1,1,0},{-16,0,3,1,1,0},{4608,2,1,2,1,0},{768,1,2,2,1,0},{-1280,0,3,2,1,0},{147456,1,2,3,1,0},{10240,0,3,3,1,0},{1769472,1,2,4,1,0},{1474560,0,3,4,1,0},{28311552,0,3,5,1,0},{226492416,0,3,6,1,0},{112,0,3,0,2,0},{-4,2,0,1,0,1},{-6,1,1,1,0,1},{-2,0,2,1,0,1},{-576,1,1,2,0,1},{-304,0,2,2,0,1},{-6144,1,1,3,0,1},{-14848,0,2,3,0,1},{-270336,0,2,4,0,1},{-1769472,0,2,5,0,1},{-144,2,0,0,1,1},{72,1,1,0,1,1},{16,0,2,0,1,1},{-4608,1,1,1,1,1},{192,0,2,1,1,1},{-110592,1,1,2,1,1},{-55296,0,2,2,1,1},{-1769472,0,2,3,1,1},{-21233664,0,2,4,1,1},{1,1,0,0,0,2},{1,0,1,0,0,2},{96,1,0,1,0,2},{120,0,1,1,0,2},{4608,0,1,2,0,2},{55296,0,1,3,0,2},{1728,1,0,0,1,2},{288,0,1,0,1,2},{27648,0,1,1,1,2},{663552,0,1,2,1,2},{-8,0,0,0,0,3},{-576,0,0,1,0,3},{-6912,0,0,0,1,3}};
constexpr SuvTerm kK38[] = {{-96,2,2,0,0,0},{-16,1,3,0,0,0},{-1536,1,3,1,0,0},{16,3,0,2,0,0},{12,2,1,2,0,0},{2,1,2,2,0,0},{-36864,1,3,2,0,0},{896,2,1,3,0,0},{384,1,2,3,0,0},{16,0,3,3,0,0},{18432,2,1,4,0,0},{26624,1,2,4,0,0},{3328,0,3,4,0,0},{737280,1,2,5,0,0},{258048,0,3,5,0,0},{7077888,1,2,6,0,0},{9240576,0,3,6,0,0},{150994944,0,3,7,0,0},{905969664,0,3,8,0,0},{-12,3,0,0,1,0},{-8,2,1,0,1,0},{-1,1,2,0,1,0},{-528,2,1,1,1,0},{-176,1,2,1,1,0},{-4,0,3,1,1,0},{-9216,2,1,2,1,0},{-11520,1,2,2,1,0},{-960,0,3,2,1,0},{-258048,1,2,3,1,0},{-73728,0,3,3,1,0},{-1769472,1,2,4,1,0},{-2211840,0,3,4,1,0},{-21233664,0,3,5,1,0},{288,1,2,0,2,0},{48,0,3,0,2,0},{4608,0,3,1,2,0},{110592,0,3,2,2,0},{1152,1,2,0,0,1},{-4,2,0,1,0,1},{-2,1,1,1,0,1},{-576,2,0,2,0,1},{-480,1,1,2,0,1},{-40,0,2,2,0,1},{-27648,1,1,3,0,1},{-7168,0,2,3,0,1},{-442368,1,1,4,0,1},{-442368,0,2,4,0,1},{-10616832,0,2,5,0,1},{-84934656,0,2,6,0,1},{288,2,0,0,1,1},{120,1,1,0,1,1},{4,0,2,0,1,1},{8064,1,1,1,1,1},{1152,0,2,1,1,1},{110592,1,1,2,1,1},{82944,0,2,2,1,1},{1327104,0,2,3,1,1},{-3456,0,2,0,2,1},{1,1,0,0,0,2},{144,1,0,1,0,2},{36,0,1,1,0,2},{6912,1,0,2,0,2},{5184,0,1,2,0,2},{221184,0,1,3,0,2},{2654208,0,1,4,0,2},{-1728,1,0,0,1,2},{-432,0,1,0,1,2},{-20736,0,1,1,1,2},{-12,0,0,0,0,3},{-1152,0,0,1,0,3},{-27648,0,0,2,0,3}};
constexpr SuvTerm kH40[] = {{-24,2,2,0,0,0},{-1,1,3,0,0,0},{-42,1,3,1,0,0},{3,0,4,1,0,0},{2,3,0,2,0,0},{1,2,1,2,0,0},{288,0,4,2,0,0},{64,2,1,3,0,0},{8,1,2,3,0,0},{6912,0,4,3,0,0},{768,2,1,4,0,0},{512,1,2,4,0,0},{-64,0,3,4,0,0},{-6144,1,2,5,0,0},{-10240,0,3,5,0,0},{-294912,1,2,6,0,0},{-573440,0,3,6,0,0},{-13369344,0,3,7,0,0},{-113246208,0,3,8,0,0},{-2,3,0,0,1,0},{-1,2,1,0,1,0},{216,1,3,0,1,0},{36,0,4,0,1,0},{-24,3,0,1,1,0},{-84,2,1,1,1,0},{-14,1,2,1,1,0},{-1,0,3,1,1,0},{3456,0,4,1,1,0},{-2304,2,1,2,1,0},{-1632,1,2,2,1,0},{-176,0,3,2,1,0},{82944,0,4,2,1,0},{-27648,2,1,3,1,0},{-55296,1,2,3,1,0},{-12032,0,3,3,1,0},{-1105920,1,2,4,1,0},{-466944,0,3,4,1,0},{-10616832,1,2,5,1,0},{-12386304,0,3,5,1,0},{-198180864,0,3,6,1,0},{-1358954496,0,3,7,1,0},{72,1,2,0,2,0},{4,0,3,0,2,0},{192,0,3,1,2,0},{-3,0,3,0,0,1},{-216,0,3,1,0,1},{-24,2,0,2,0,1},{2,0,2,2,0,1},{384,1,1,3,0,1},{416,0,2,3,0,1},{18432,1,1,4,0,1},{30720,0,2,4,0,1},{958464,0,2,5,0,1},{10616832,0,2,6,0,1},{36,2,0,0,1,1},{12,1,1,0,1,1},{1,0,2,0,1,1},{-2592,0,3,0,1,1},{864,2,0,1,1,1},{1152,1,1,1,1,1},{168,0,2,1,1,1},{41472,1,1,2,1,1},{12672,0,2,2,1,1},{663552,1,1,3,1,1},{552960,0,2,3,1,1},{13271040,0,2,4,1,1},{127401984,0,2,5,1,1},{-6,1,0,1,0,2},{-3,0,1,1,0,2},{-288,1,0,2,0,2},{-432,0,1,2,0,2},{-20736,0,1,3,0,2},{-331776,0,1,4,0,2},{-216,1,0,0,1,2},{-36,0,1,0,1,2},{-10368,1,0,1,1,2},{-5184,0,1,1,1,2},{-248832,0,1,2,1,2},{-3981312,0,1,3,1,2},{1,0,0,0,0,3},{120,0,0,1,0,3},{3456,0,0,2,0,3},{864,0,0,0,1,3},{41472,0,0,1,1,3}};
constexpr SuvTerm kI40[] = {{288,3,1,0,0,0},{96,2,2,0,0,0},{16,1,3,0,0,0},{9216,2,2,1,0,0},{1920,1,3,1,0,0},{-8,3,0,2,0,0},{-2,2,1,2,0,0},{221184,2,2,2,0,0},{110592,1,3,2,0,0},{96,1,2,3,0,0},{8,0,3,3,0,0},{3538944,1,3,3,0,0},{3072,2,1,4,0,0},{11776,1,2,4,0,0},{2048,0,3,4,0,0},{42467328,1,3,4,0,0},{466944,1,2,5,0,0},{196608,0,3,5,0,0},{5898240,1,2,6,0,0},{8749056,0,3,6,0,0},{179306496,0,3,7,0,0},{1358954496,0,3,8,0,0},{12,3,0,0,1,0},{6,2,1,0,1,0},{1,1,2,0,1,0},{288,3,0,1,1,0},{576,2,1,1,1,0},{152,1,2,1,1,0},{4,0,3,1,1,0},{23040,2,1,2,1,0},{11136,1,2,2,1,0},{768,0,3,2,1,0},{331776,2,1,3,1,0},{516096,1,2,3,1,0},{64512,0,3,3,1,0},{13271040,1,2,4,1,0},{3538944,0,3,4,1,0},{127401984,1,2,5,1,0},{127401984,0,3,5,1,0},{2378170368,0,3,6,1,0},{16307453952,0,3,7,1,0},{-864,2,1,0,2,0},{-288,1,2,0,2,0},{-48,0,3,0,2,0},{-27648,1,2,1,2,0},{-5760,0,3,1,2,0},{-663552,1,2,2,2,0},{-331776,0,3,2,2,0},{-10616832,0,3,3,2,0},{-127401984,0,3,4,2,0},{-6912,2,1,0,0,1},{-1152,1,2,0,0,1},{-4,2,0,1,0,1},{-2,1,1,1,0,1},{-110592,1,2,1,0,1},{-96,2,0,2,0,1},{-336,1,1,2,0,1},{-32,0,2,2,0,1},{-2654208,1,2,2,0,1},{-19968,1,1,3,0,1},{-6272,0,2,3,0,1},{-368640,1,1,4,0,1},{-436224,0,2,4,0,1},{-12681216,0,2,5,0,1},{-127401984,0,2,6,0,1},{-288,2,0,0,1,1},{-72,1,1,0,1,1},{-4,0,2,0,1,1},{-10368,2,0,1,1,1},{-9216,1,1,1,1,1},{-672,0,2,1,1,1},{-497664,1,1,2,1,1},{-78336,0,2,2,1,1},{-7962624,1,1,3,1,1},{-5308416,0,2,3,1,1},{-159252480,0,2,4,1,1},{-1528823808,0,2,5,1,1},{20736,1,1,0,2,1},{3456,0,2,0,2,1},{331776,0,2,1,2,1},{7962624,0,2,2,2,1},{1,1,0,0,0,2},{41472,1,1,0,0,2},{168,1,0,1,0,2},{36,0,1,1,0,2},{5760,1,0,2,0,2},{5472,0,1,2,0,2},{267264,0,1,3,0,2},{3981312,0,1,4,0,2},{2592,1,0,0,1,2},{144,0,1,0,1,2},{124416,1,0,1,1,2},{41472,0,1,1,1,2},{2985984,0,1,2,1,2},{47775744,0,1,3,1,2},{-124416,0,1,0,2,2},{-12,0,0,0,0,3},{-1440,0,0,1,0,3},{-41472,0,0,2,0,3},{-10368,0,0,0,1,3},{-497664,0,0,1,1,3}};
constexpr SuvTerm kK42[] = {{-48,3,1,0,0,0},{8,2,2,0,0,0},{192,1,3,1,0,0},{-2,3,0,2,0,0},{-1,2,1,2,0,0},{-18432,2,2,2,0,0},{18432,1,3,2,0,0},{-64,3,0,3,0,0},{-112,2,1,3,0,0},{-16,1,2,3,0,0},{294912,1,3,3,0,0},{-4608,2,1,4,0,0},{-2560,1,2,4,0,0},{-128,0,3,4,0,0},{-73728,2,1,5,0,0},{-141312,1,2,5,0,0},{-24576,0,3,5,0,0},{-3244032,1,2,6,0,0},{-1671168,0,3,6,0,0},{-28311552,1,2,7,0,0},{-49545216,0,3,7,0,0},{-679477248,0,3,8,0,0},{-3623878656,0,3,9,0,0},{2,3,0,0,1,0},{1,2,1,0,1,0},{-2304,1,3,0,1,0},{72,3,0,1,1,0},{108,2,1,1,1,0},{10,1,2,1,1,0},{-1,0,3,1,1,0},{4032,2,1,2,1,0},{1632,1,2,2,1,0},{-144,0,3,2,1,0},{55296,2,1,3,1,0},{82944,1,2,3,1,0},{-2304,0,3,3,1,0},{1548288,1,2,4,1,0},{331776,0,3,4,1,0},{10616832,1,2,5,1,0},{10616832,0,3,5,1,0},{84934656,0,3,6,1,0},{-72,1,2,0,2,0},{12,0,3,0,2,0},{-3456,1,2,1,2,0},{-82944,0,3,2,2,0},{-1327104,0,3,3,2,0},{6912,0,3,0,3,0},{576,2,1,0,0,1},{-192,1,2,0,0,1},{-9216,1,2,1,0,1},{48,2,0,2,0,1},{24,1,1,2,0,1},{2,0,2,2,0,1},{2304,2,0,3,0,1},{3072,1,1,3,0,1},{608,0,2,3,0,1},{129024,1,1,4,0,1},{61440,0,2,4,0,1},{1769472,1,1,5,0,1},{2654208,0,2,5,0,1},{49545216,0,2,6,0,1},{339738624,0,2,7,0,1},{-36,2,0,0,1,1},{-12,1,1,0,1,1},{1,0,2,0,1,1},{-1728,2,0,1,1,1},{-1440,1,1,1,1,1},{48,0,2,1,1,1},{-55296,1,1,2,1,1},{-6912,0,2,2,1,1},{-663552,1,1,3,1,1},{-442368,0,2,3,1,1},{-5308416,0,2,4,1,1},{864,0,2,0,2,1},{41472,0,2,1,2,1},{-6,1,0,1,0,2},{-3,0,1,1,0,2},{-864,1,0,2,0,2},{-576,0,1,2,0,2},{-27648,1,0,3,0,2},{-39168,0,1,3,0,2},{-1105920,0,1,4,0,2},{-10616832,0,1,5,0,2},{216,1,0,0,1,2},{36,0,1,0,1,2},{10368,1,0,1,1,2},{3456,0,1,1,1,2},{82944,0,1,2,1,2},{1,0,0,0,0,3},{144,0,0,1,0,3},{6912,0,0,2,0,3},{110592,0,0,3,0,3}};
constexpr SuvTerm kH48[] = {{-162,3,2,0,0,0},{-63,2,3,0,0,0},{-4,1,4,0,0,0},{-5172,2,3,1,0,0},{-834,1,4,1,0,0},{-1,4,0,2,0,0},{3,3,1,2,0,0},{1,2,2,2,0,0},{-124416,2,3,2,0,0},{-61632,1,4,2,0,0},{48,0,5,2,0,0},{-64,3,1,3,0,0},{40,2,2,3,0,0},{-12,1,3,3,0,0},{-3,0,4,3,0,0},{-1981440,1,4,3,0,0},{5376,0,5,3,0,0},{-1536,3,1,4,0,0},{-1152,2,2,4,0,0},{-1792,1,3,4,0,0},{-624,0,4,4,0,0},{-23887872,1,4,4,0,0},{184320,0,5,4,0,0},{-79872,2,2,5,0,0},{-99328,1,3,5,0,0},{-51712,0,4,5,0,0},{1769472,0,5,5,0,0},{-884736,2,2,6,0,0},{-2441216,1,3,6,0,0},{-2170880,0,4,6,0,0},{-33030144,1,3,7,0,0},{-48758784,0,4,7,0,0},{-226492416,1,3,8,0,0},{-594542592,0,4,8,0,0},{-4529848320,0,4,9,0,0},{-21743271936,0,4,10,0,0},{1,4,0,0,1,0},{-3,3,1,0,1,0},{-1,2,2,0,1,0},{-72,1,4,0,1,0},{-12,0,5,0,1,0},{12,3,1,1,1,0},{-78,2,2,1,1,0},{-1,1,3,1,1,0},{1,0,4,1,1,0},{-1152,0,5,1,1,0},{1152,3,1,2,1,0},{-2496,2,2,2,1,0},{-464,1,3,2,1,0},{160,0,4,2,1,0},{-27648,0,5,2,1,0},{-4608,2,2,3,1,0},{-38912,1,3,3,1,0},{7552,0,4,3,1,0},{442368,2,2,4,1,0},{-1290240,1,3,4,1,0},{-24576,0,4,4,1,0},{-8847360,1,3,5,1,0},{-11501568,0,4,5,1,0},{56623104,1,3,6,1,0},{-297271296,0,4,6,1,0},{-2038431744,0,4,7,1,0},{288,2,2,0,2,0},{124,1,3,0,2,0},{7,0,4,0,2,0},{9216,1,3,1,2,0},{1488,0,4,1,2,0},{221184,1,3,2,2,0},{110592,0,4,2,2,0},{3538944,0,4,3,2,0},{42467328,0,4,4,2,0},{3888,2,2,0,0,1},{642,1,3,0,0,1},{61920,1,3,1,0,1},{-72,0,4,1,0,1},{48,3,0,2,0,1},{-12,2,1,2,0,1},{24,1,2,2,0,1},{7,0,3,2,0,1},{1492992,1,3,2,0,1},{-6912,0,4,2,0,1},{2688,2,1,3,0,1},{3072,1,2,3,0,1},{1360,0,3,3,0,1},{-110592,0,4,3,0,1},{55296,2,1,4,0,1},{116736,1,2,4,0,1},{96768,0,3,4,0,1},{2211840,1,2,5,0,1},{3133440,0,3,5,0,1},{21233664,1,2,6,0,1},{48955392,0,3,6,0,1},{452984832,0,3,7,0,1},{2717908992,0,3,8,0,1},{-36,3,0,0,1,1},{48,2,1,0,1,1},{3,1,2,0,1,1},{-1,0,3,0,1,1},{864,0,4,0,1,1},{144,2,1,1,1,1},{480,1,2,1,1,1},{-180,0,3,1,1,1},{-27648,2,1,2,1,1},{48384,1,2,2,1,1},{-5184,0,3,2,1,1},{552960,1,2,3,1,1},{387072,0,3,3,1,1},{-5308416,1,2,4,1,1},{19906560,0,3,4,1,1},{191102976,0,3,5,1,1},{-6912,1,2,0,2,1},{-1152,0,3,0,2,1},{-110592,0,3,1,2,1},{-2654208,0,3,2,2,1},{-23328,1,2,0,0,2},{36,0,3,0,0,2},{-6,2,0,1,0,2},{-15,1,1,1,0,2},{-6,0,2,1,0,2},{1728,0,3,1,0,2},{-864,2,0,2,0,2},{-1296,1,1,2,0,2},{-1032,0,2,2,0,2},{-41472,1,1,3,0,2},{-59136,0,2,3,0,2},{-663552,1,1,4,0,2},{-1327104,0,2,4,0,2},{-15925248,0,2,5,0,2},{-127401984,0,2,6,0,2},{432,2,0,0,1,2},{-252,1,1,0,1,2},{42,0,2,0,1,2},{-8640,1,1,1,1,2},{-864,0,2,1,1,2},{165888,1,1,2,1,2},{-373248,0,2,2,1,2},{-5971968,0,2,3,1,2},{41472,0,2,0,2,2},{1,1,0,0,0,3},{2,0,1,0,0,3},{144,1,0,1,0,3},{276,0,1,1,0,3},{6912,1,0,2,0,3},{12096,0,1,2,0,3},{221184,0,1,3,0,3},{2654208,0,1,4,0,3},{-1728,1,0,0,1,3},{1296,0,1,0,1,3},{62208,0,1,1,1,3},{-9,0,0,0,0,4},{-864,0,0,1,0,4},{-20736,0,0,2,0,4}};
constexpr SuvTerm kH52[] = {{-876,4,1,0,0,0},{-124,3,2,0,0,0},{1,2,3,0,0,0},{-21504,3,2,1,0,0},{384,2,3,1,0,0},{288,1,4,1,0,0},{-2,4,0,2,0,0},{-7,3,1,2,0,0},{-1,2,2,2,0,0},{-672768,3,2,2,0,0},{-23040,2,3,2,0,0},{53760,1,4,2,0,0},{-64,4,0,3,0,0},{-512,3,1,3,0,0},{-240,2,2,3,0,0},{-5750784,2,3,3,0,0},{2,0,4,3,0,0},{3588096,1,4,3,0,0},{-6400,3,1,4,0,0},{-18432,2,2,4,0,0},{-704,1,3,4,0,0},{-129171456,2,3,4,0,0},{480,0,4,4,0,0},{100270080,1,4,4,0,0},{-98304,3,1,5,0,0},{-538624,2,2,5,0,0},{-131072,1,3,5,0,0},{43008,0,4,5,0,0},{962592768,1,4,5,0,0},{-6193152,2,2,6,0,0},{-8241152,1,3,6,0,0},{1630208,0,4,6,0,0},{-56623104,2,2,7,0,0},{-208404480,1,3,7,0,0},{10616832,0,4,7,0,0},{-2378170368,1,3,8,0,0},{-1019215872,0,4,8,0,0},{-14495514624,1,3,9,0,0},{-29595009024,0,4,9,0,0},{-318901321728,0,4,10,0,0},{-1391569403904,0,4,11,0,0},{2,4,0,0,1,0},{7,3,1,0,1,0},{1,2,2,0,1,0},{-18432,2,3,0,1,0},{-3072,1,4,0,1,0},{72,4,0,1,1,0},{556,3,1,1,1,0},{242,2,2,1,1,0},{-1,1,3,1,1,0},{-2,0,4,1,1,0},{-294912,1,4,1,1,0},{6144,3,1,2,1,0},{18784,2,2,2,1,0},{272,1,3,2,1,0},{-528,0,4,2,1,0},{-7077888,1,4,2,1,0},{82944,3,1,3,1,0},{516096,2,2,3,1,0},{89344,1,3,3,1,0},{-52480,0,4,3,1,0},{4202496,2,2,4,1,0},{6316032,1,3,4,1,0},{-2383872,0,4,4,1,0},{31850496,2,2,5,1,0},{136249344,1,3,5,1,0},{-44236800,0,4,5,1,0},{934281216,1,3,6,1,0},{-9437184,0,4,6,1,0},{4076863488,1,3,7,1,0},{7247757312,0,4,7,1,0},{43486543872,0,4,8,1,0},{2304,3,1,0,2,0},{216,2,2,0,2,0},{100,1,3,0,2,0},{20,0,4,0,2,0},{51840,2,2,1,2,0},{4032,1,3,1,2,0},{2400,0,4,1,2,0},{1769472,2,2,2,2,0},{-165888,1,3,2,2,0},{4608,0,4,2,2,0},{11501568,1,3,3,2,0},{-8699904,0,4,3,2,0},{339738624,1,3,4,2,0},{-336199680,0,4,4,2,0},{-3227516928,0,4,5,2,0},{55296,1,3,0,3,0},{9216,0,4,0,3,0},{884736,0,4,1,3,0},{21233664,0,4,2,3,0},{21024,3,1,0,0,1},{240,2,2,0,0,1},{-288,1,3,0,0,1},{179712,2,2,1,0,1},{-59904,1,3,1,0,1},{72,3,0,2,0,1},{176,2,1,2,0,1},{6,1,2,2,0,1},{8073216,2,2,2,0,1},{-2,0,3,2,0,1},{-3760128,1,3,2,0,1},{3072,3,0,3,0,1},{13952,2,1,3,0,1},{2656,1,2,3,0,1},{-480,0,3,3,0,1},{-60162048,1,3,3,0,1},{239616,2,1,4,0,1},{280576,1,2,4,0,1},{-36352,0,3,4,0,1},{3538944,2,1,5,0,1},{10887168,1,2,5,0,1},{-417792,0,3,5,0,1},{166330368,1,2,6,0,1},{59768832,0,3,6,0,1},{1358954496,1,2,7,0,1},{2378170368,0,3,7,0,1},{32614907904,0,3,8,0,1},{173946175488,0,3,9,0,1},{-60,3,0,0,1,1},{-164,2,1,0,1,1},{-3,1,2,0,1,1},{2,0,3,0,1,1},{221184,1,3,0,1,1},{-2592,3,0,1,1,1},{-13248,2,1,1,1,1},{-1816,1,2,1,1,1},{544,0,3,1,1,1},{-152064,2,1,2,1,1},{-202368,1,2,2,1,1},{52992,0,3,2,1,1},{-1990656,2,1,3,1,1},{-6967296,1,2,3,1,1},{1916928,0,3,3,1,1},{-61046784,1,2,4,1,1},{7077888,0,3,4,1,1},{-382205952,1,2,5,1,1},{-509607936,0,3,5,1,1},{-4076863488,0,3,6,1,1},{-55296,2,1,0,2,1},{1728,1,2,0,2,1},{-480,0,3,0,2,1},{-359424,1,2,1,2,1},{96768,0,3,1,2,1},{-21233664,1,2,2,2,1},{12607488,0,3,2,2,1},{201719808,0,3,3,2,1},{-663552,0,3,0,3,1},{-126144,2,1,0,0,2},{19584,1,2,0,0,2},{-6,2,0,1,0,2},{-3,1,1,1,0,2},{940032,1,2,1,0,2},{-1440,2,0,2,0,2},{-1776,1,1,2,0,2},{56,0,2,2,0,2},{-55296,2,0,3,0,2},{-143616,1,1,3,0,2},{-2944,0,2,3,0,2},{-3428352,1,1,4,0,2},{-1155072,0,2,4,0,2},{-42467328,1,1,5,0,2},{-63700992,0,2,5,0,2},{-1189085184,0,2,6,0,2},{-8153726976,0,2,7,0,2},{648,2,0,0,1,2},{1020,1,1,0,1,2},{-128,0,2,0,1,2},{31104,2,0,1,1,2},{84672,1,1,1,1,2},{-13632,0,2,1,1,2},{1078272,1,1,2,1,2},{-193536,0,2,2,1,2},{11943936,1,1,3,1,2},{10616832,0,2,3,1,2},{127401984,0,2,4,1,2},{331776,1,1,0,2,2},{-65664,0,2,0,2,2},{-3151872,0,2,1,2,2},{1,1,0,0,0,3},{216,1,0,1,0,3},{48,0,1,1,0,3},{17280,1,0,2,0,3},{9216,0,1,2,0,3},{442368,1,0,3,0,3},{626688,0,1,3,0,3},{17694720,0,1,4,0,3},{169869312,0,1,5,0,3},{-2592,1,0,0,1,3},{-576,0,1,0,1,3},{-124416,1,0,1,1,3},{-55296,0,1,1,1,3},{-1327104,0,1,2,1,3},{-12,0,0,0,0,4},{-1728,0,0,1,0,4},{-82944,0,0,2,0,4},{-1327104,0,0,3,0,4}};
constexpr SuvTerm kH24Printed[] = {{-2,2,0,1,0,0},{1,1,1,1,0,0},{96,1,1,2,0,0},{8,0,2,2,0,0},{1536,1,1,3,0,0},{896,0,2,3,0,0},{30720,0,2,4,0,0},{294912,0,2,5,0,0},{-12,1,1,0,1,0},{-2,0,2,0,1,0},{-192,0,2,1,1,0},{-4608,0,2,2,1,0},{-1,1,0,0,0,1},{-48,1,0,1,0,1},{-12,0,1,1,0,1},{-1152,0,1,2,0,1},{-18432,0,1,3,0,1},{144,0,1,0,1,1},{6,0,0,0,0,2},{288,0,0,1,0,2}};
constexpr SuvTerm kK26Printed[] = {{2,2,0,1,0,0},{1,1,1,1,0,0},{96,1,1,2,0,0},{8,0,2,2,0,0},{3072,1,1,3,0,0},{1280,0,2,3,0,0},{61440,0,2,4,0,0},{884736,0,2,5,0,0},{72,2,0,0,1,0},{36,1,1,0,1,0},{4,0,2,0,1,0},{2304,1,1,1,1,0},{480,0,2,1,1,0},{55296,1,1,2,1,0},{27648,0,2,2,1,0},{884736,0,2,3,1,0},{10616832,0,2,4,1,0},{-1,1,0,0,0,1},{-96,1,0,1,0,1},{-24,0,1,1,0,1},{-2304,0,1,2,0,1},{-55296,0,1,3,0,1},{-1728,1,0,0,1,1},{-288,0,1,0,1,1},{-27648,0,1,1,1,1},{-663552,0,1,2,1,1},{12,0,0,0,0,2},{864,0,0,1,0,2},{10368,0,0,0,1,2}};
constexpr SuvTerm kL30Printed[] = {{1,3,0,0,0,0},{1,2,1,0,0,0},{48,2,1,1,0,0},{16,1,2,1,0,0},{-1,0,3,1,0,0},{1152,2,1,2,0,0},{1344,1,2,2,0,0},{-32,0,3,2,0,0},{36864,1,2,3,0,0},{7168,0,3,3,0,0},{442368,1,2,4,0,0},{368640,0,3,4,0,0},{7077888,0,3,5,0,0},{56623104,0,3,6,0,0},{20,0,3,0,1,0},{-36,2,0,0,0,1},{-18,1,1,0,0,1},{1,0,2,0,0,1},{-1152,1,1,1,0,1},{-96,0,2,1,0,1},{-27648,1,1,2,0,1},{-13824,0,2,2,0,1},{-442368,0,2,3,0,1},{-5308416,0,2,4,0,1},{432,1,0,0,0,2},{72,0,1,0,0,2},{6912,0,1,1,0,2},{165888,0,1,2,0,2},{-1728,0,0,0,0,3}};
constexpr SuvPolynomial kPolys[] = {
  {"H20", 20, kH20, sizeof(kH20) / sizeof(SuvTerm), nullptr},
  {"K22", 22, kK22, sizeof(kK22) / sizeof(SuvTerm), nullptr},
  {"H24", 24, kH24, sizeof(kH24) / sizeof(SuvTerm), "printed display equals -H24 except its H12^2*S term; corrected against the construction (arbitrated by H24|=X24 and by the H28/K30 displays)"},
  {"K26", 26, kK26, sizeof(kK26) / sizeof(SuvTerm), "printed display equals -K26 (global negation); corrected (arbitrated by K26|=X10*X16)"},
  {"H28", 28, kH28, sizeof(kH28) / sizeof(SuvTerm), nullptr},
  {"I28", 28, kI28, sizeof(kI28) / sizeof(SuvTerm), nullptr},
  {"K30", 30, kK30, sizeof(kK30) / sizeof(SuvTerm), nullptr},
  {"L30", 30, kL30, sizeof(kL30) / sizeof(SuvTerm), "printed display equals L30 + H8*K22, the expansion of (F10*H20 + 5*H8*K22)/6; corrected to the construction (F10*H20 - H8*K22)/6"},
  {"K34", 34, kK34, sizeof(kK34) / sizeof(SuvTerm), nullptr},
  {"H36", 36, kH36, sizeof(kH36) / sizeof(SuvTerm), nullptr},
  {"K38", 38, kK38, sizeof(kK38) / sizeof(SuvTerm), "definitional: the paper gives no construction for K38; this polynomial defines it"},
  {"H40", 40, kH40, sizeof(kH40) / sizeof(SuvTerm), nullptr},
  {"I40", 40, kI40, sizeof(kI40) / sizeof(SuvTerm), nullptr},
  {"K42", 42, kK42, sizeof(kK42) / sizeof(SuvTerm), nullptr},
  {"H48", 48, kH48, sizeof(kH48) / sizeof(SuvTerm), nullptr},
  {"H52", 52, kH52, sizeof(kH52) / sizeof(SuvTerm), nullptr},
};
constexpr SuvPolynomial kPrinted[] = {
  {"H24", 24, kH24Printed, sizeof(kH24Printed) / sizeof(SuvTerm), nullptr},
  {"K26", 26, kK26Printed, sizeof(kK26Printed) / sizeof(SuvTerm), nullptr},
  {"L30", 30, kL30Printed, sizeof(kL30Printed) / sizeof(SuvTerm), nullptr},
};
}  // namespace

std::span<const SuvPolynomial> suv_polynomials() { return kPolys; }

std::span<const SuvPolynomial> suv_printed_displays() { return kPrinted; }

const SuvPolynomial* find_suv_polynomial(std::string_view name) {
  for (const auto& p : kPolys)
    if (name == p.name) return &p;
  return nullptr;
}

}  // namespace hermring
