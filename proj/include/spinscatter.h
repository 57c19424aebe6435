/* spinscatter C API.
 *
 * First-order Dirac scattering spin amplitudes in arbitrary static magnetic
 * fields, formulated in the intrinsic frame built from the total momentum
 * (k), momentum transfer (q) and their normal (l = k x q). Natural units
 * (hbar = c = 1) throughout.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return SSC_OK on success; on failure they return a status code
 * and leave a human-readable detail string in ssc_last_error_message()
 * (thread local). Output parameters are untouched on failure.
 */

#ifndef SPINSCATTER_H
#define SPINSCATTER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef SSC_API
#define SSC_API __attribute__((visibility("default")))
#endif

typedef enum ssc_status {
  SSC_OK = 0,
  SSC_ERROR_INVALID_ARGUMENT = 1,
  SSC_ERROR_NON_UNIT_VECTOR = 2,
  SSC_ERROR_INELASTIC_INPUT = 3,
  SSC_ERROR_DEGENERATE_GEOMETRY = 4,
  SSC_ERROR_NON_POSITIVE_MASS = 5,
  SSC_ERROR_ZERO_MOMENTUM_TRANSFER = 6,
  SSC_ERROR_OUT_OF_PLANE = 7,
  SSC_ERROR_NULL_POTENTIAL = 8,
  SSC_ERROR_INTERNAL = 9
} ssc_status;

SSC_API const char* ssc_version(void);
SSC_API const char* ssc_status_name(ssc_status status);

/* Detail message for the most recent failure on this thread. */
SSC_API const char* ssc_last_error_message(void);

/* ------------------------------------------------------------------ */
/* Scattering frame                                                    */

typedef struct ssc_frame ssc_frame;

typedef struct ssc_frame_info {
  double k_hat[3];
  double q_hat[3];
  double l_hat[3];
  double p_in_hat[3];
  double p_out_hat[3];
  double theta;  /* angle between p_in and p_out, radians */
  double p;      /* conserved momentum magnitude */
  double mass;
  double energy; /* sqrt(p^2 + mass^2) */
} ssc_frame_info;

/* Requires |p_in| = |p_out| (relative tolerance 1e-9) and a scattering
 * angle at least 1e-6 rad away from both 0 and pi. */
SSC_API ssc_status ssc_frame_create(const double p_in[3],
                                    const double p_out[3], double mass,
                                    ssc_frame** out);
SSC_API void ssc_frame_destroy(ssc_frame* frame);
SSC_API ssc_status ssc_frame_get_info(const ssc_frame* frame,
                                      ssc_frame_info* out);

/* ------------------------------------------------------------------ */
/* Potentials (described by their Fourier transforms A(q))             */

typedef struct ssc_potential ssc_potential;

/* Scalar gauge function f(q); the shifted transform is A(q) + q f(q). */
typedef void (*ssc_gauge_fn)(const double q[3], double* out_re,
                             double* out_im, void* user);

/* Flux line along z: A(q) = -flux (q_y, -q_x, 0)/q^2, q normal to the line. */
SSC_API ssc_status ssc_potential_create_ab(double flux, double charge,
                                           ssc_potential** out);
/* Magnetic dipole: A(q) = (moment x q)/q^2. */
SSC_API ssc_status ssc_potential_create_dipole(const double moment[3],
                                               double charge,
                                               ssc_potential** out);
/* Constant unit direction, A(q) = a_hat. */
SSC_API ssc_status ssc_potential_create_fixed(const double a_hat[3],
                                              double charge,
                                              ssc_potential** out);
SSC_API ssc_status ssc_potential_create_gauge_shifted(
    const ssc_potential* base, ssc_gauge_fn f, void* user,
    ssc_potential** out);
SSC_API void ssc_potential_destroy(ssc_potential* potential);

SSC_API ssc_status ssc_potential_fourier(const ssc_potential* potential,
                                         const double q[3], double out_re[3],
                                         double out_im[3]);

/* ------------------------------------------------------------------ */
/* Matrix elements                                                     */

#define SSC_METHOD_ORACLE 0
#define SSC_METHOD_REDUCED 1

typedef struct ssc_amplitude {
  double value_re, value_im; /* u_out^dag (gamma5 Sigma.a_hat) u_in */
  double proj_l_re, proj_l_im; /* a_hat . l_hat */
  double proj_k_re, proj_k_im; /* a_hat . k_hat */
  double proj_q_re, proj_q_im; /* a_hat . q_hat */
  double potential_magnitude;  /* |A(q)| */
  double scale;                /* tolerance scale for vanishing channels */
  int h_in, h_out;
  int method;
} ssc_amplitude;

/* Brute-force 4-spinor evaluation (ground truth). */
SSC_API ssc_status ssc_amplitude_oracle(const ssc_frame* frame,
                                        const ssc_potential* potential,
                                        int h_in, int h_out,
                                        ssc_amplitude* out);

/* Closed form (B + h i A sin(theta/2)) 2 N'^2 p/(E+m) for the
 * helicity-conserving channel; the flip channel is identically zero. */
SSC_API ssc_status ssc_amplitude_reduced(const ssc_frame* frame,
                                         const ssc_potential* potential,
                                         int h, ssc_amplitude* out);

/* Coefficient of the symbolic delta(E_out - E_in) in the first-order
 * transition element: -2 pi e |N|^2 |A(q)| M. */
SSC_API ssc_status ssc_s_matrix_element(const ssc_frame* frame,
                                        const ssc_potential* potential,
                                        int h_in, int h_out,
                                        double normalization, double* out_re,
                                        double* out_im);

/* (1/2) sum over the four helicity channels of |M|^2. */
SSC_API ssc_status ssc_spin_averaged_m2(const ssc_frame* frame,
                                        const ssc_potential* potential,
                                        double* out);

/* <k;h|gamma5|k;h> = h 2 N'^2 p/(E+m). */
SSC_API ssc_status ssc_k_basis_element(const ssc_frame* frame, int h,
                                       double* out_re, double* out_im);

typedef struct ssc_cross_section {
  double theta;
  double dsigma_dtheta;
  double spin_averaged_m2;
  /* Textbook first-order Aharonov-Bohm constant, reported for reference;
   * see the library documentation for the normalization relation. */
  double dsigma_dtheta_reference;
} ssc_cross_section;

/* Unpolarized Aharonov-Bohm cross section at the frame's angle. */
SSC_API ssc_status ssc_ab_cross_section(const ssc_frame* frame, double flux,
                                        double charge,
                                        ssc_cross_section* out);

/* ------------------------------------------------------------------ */
/* Invariant self-checks                                               */

SSC_API int ssc_invariant_count(void);
SSC_API const char* ssc_invariant_name(int index);

/* Runs every operator identity and cross-module invariant on `trials`
 * seeded random elastic geometries; writes the worst deviation per
 * invariant into max_deviations[0..count-1] (count must equal
 * ssc_invariant_count()). All deviations are < 1e-10 for a healthy build. */
SSC_API ssc_status ssc_invariant_check(uint64_t seed, int trials,
                                       double* max_deviations, int count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPINSCATTER_H */
