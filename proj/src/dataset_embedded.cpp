#include "quintic/dataset.hpp"

namespace quintic {

// The 125 pure metacyclic fields with normalized radicand 2 <= D <= 150.
// V_L, V_M, V_N are 5-valuations of the class numbers of the degree 5, 10
// and 20 fields; E is the exponent of the subfield unit index; the pattern
// is the eligibility quartet (1,2,4,5); pf lists principal factors when they
// are not forced by the rest of the row (L and K name an intermediate prime
// and its 2-norm kernel ideal, K1 and K2 the two relative kernel ideals).
const char* embedded_dataset_tsv() {
    return
        "no\tD\tspecies\tf4\tm\tVL\tVM\tVN\tE\tpattern\ttype\tpf\tproto\n"
        "1\t2\t1b\t5^2*2^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n"
        "2\t3\t1b\t5^2*3^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "3\t5\t1a\t5^6\t1\t0\t0\t0\t5\t-,-,-,ox\tth\t\t1\n"
        "4\t6\t1b\t5^2*2^4*3^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t1\n"
        "5\t7\t2\t7^4\t1\t0\t0\t0\t5\t-,-,-,ox\tth\t\t1\n"
        "6\t10\t1a\t5^6*2^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n"
        "7\t11\t1b\t5^2*11^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tL,K1\t1\n"
        "8\t12\t1b\t5^2*2^4*3^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "9\t13\t1b\t5^2*13^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "10\t14\t1b\t5^2*2^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t1\n"
        "11\t15\t1a\t5^6*3^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "12\t17\t1b\t5^2*17^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "13\t18\t2\t2^4*3^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t1\n"
        "14\t19\t1b\t5^2*19^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tL\t1\n"
        "15\t20\t1a\t5^6*2^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "16\t21\t1b\t5^2*3^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "17\t22\t1b\t5^2*2^4*11^4\t3\t1\t1\t3\t4\t-,-,(x),-\tb2\t2*5,K\t1\n"
        "18\t23\t1b\t5^2*23^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "19\t26\t2\t2^4*13^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "20\t28\t1b\t5^2*2^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "21\t29\t1b\t5^2*29^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tL\t0\n"
        "22\t30\t1a\t5^6*2^4*3^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t1\n"
        "23\t31\t1b\t5^2*31^4\t1\t2\t3\t5\t2\t-,-,ox,-\ta1\tK1,K2\t1\n"
        "24\t33\t1b\t5^2*3^4*11^4\t3\t2\t2\t4\t1\t-,-,ox,-\ta2\tK,K2\t1\n"
        "25\t34\t1b\t5^2*2^4*17^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "26\t35\t1a\t5^6*7^4\t4\t0\t0\t1\t6\t-,-,-,ox\teta\t\t1\n"
        "27\t37\t1b\t5^2*37^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "28\t38\t1b\t5^2*2^4*19^4\t3\t1\t1\t3\t4\t-,ox,-,-\tb2\t5,K\t1\n"
        "29\t39\t1b\t5^2*3^4*13^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "30\t40\t1a\t5^6*2^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "31\t41\t1b\t5^2*41^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tL,K2\t0\n"
        "32\t42\t1b\t5^2*2^4*3^4*7^4\t12\t1\t2\t5\t6\tx,-,-,-\tg\t2*5,3*5^2\t1\n"
        "33\t43\t2\t43^4\t1\t0\t0\t0\t5\t-,-,-,ox\tth\t\t0\n"
        "34\t44\t1b\t5^2*2^4*11^4\t3\t1\t1\t3\t4\t-,-,(x),-\tb2\t2*5,K\t0\n"
        "35\t45\t1a\t5^6*3^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "36\t46\t1b\t5^2*2^4*23^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "37\t47\t1b\t5^2*47^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "38\t48\t1b\t5^2*2^4*3^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "39\t51\t2\t3^4*17^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "40\t52\t1b\t5^2*2^4*13^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "41\t53\t1b\t5^2*53^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "42\t55\t1a\t5^6*11^4\t4\t1\t1\t2\t3\t-,-,ox,-\ta2\tK,K1\t1\n"
        "43\t56\t1b\t5^2*2^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "44\t57\t2\t3^4*19^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tK\t1\n"
        "45\t58\t1b\t5^2*2^4*29^4\t3\t1\t1\t3\t4\t-,ox,-,-\tb2\t29*5^2,K\t0\n"
        "46\t59\t1b\t5^2*59^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tL\t0\n"
        "47\t60\t1a\t5^6*2^4*3^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "48\t61\t1b\t5^2*61^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tL,K2\t0\n"
        "49\t62\t1b\t5^2*2^4*31^4\t3\t1\t1\t3\t4\t-,-,(x),-\tb2\t5,K\t0\n"
        "50\t63\t1b\t5^2*3^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "51\t65\t1a\t5^6*13^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "52\t66\t1b\t5^2*2^4*3^4*11^4\t13\t1\t2\t5\t6\t-,-,x,-\tg\t2*5,3*5^3\t1\n"
        "53\t67\t1b\t5^2*67^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "54\t68\t2\t2^4*17^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "55\t69\t1b\t5^2*3^4*23^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "56\t70\t1a\t5^6*2^4*7^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t1\n"
        "57\t71\t1b\t5^2*71^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tL,K1\t0\n"
        "58\t73\t1b\t5^2*73^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "59\t74\t2\t2^4*37^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "60\t75\t1a\t5^6*3^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "61\t76\t2\t2^4*19^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tK\t0\n"
        "62\t77\t1b\t5^2*7^4*11^4\t4\t1\t1\t3\t4\t-,-,(x),-\tb2\t11*5^3,K\t1\n"
        "63\t78\t1b\t5^2*2^4*3^4*13^4\t13\t1\t2\t5\t6\tx,-,-,-\tg\t3,2*5^3\t1\n"
        "64\t79\t1b\t5^2*79^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tL\t0\n"
        "65\t80\t1a\t5^6*2^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "66\t82\t2\t2^4*41^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tK,K2\t1\n"
        "67\t83\t1b\t5^2*83^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "68\t84\t1b\t5^2*2^4*3^4*7^4\t12\t1\t2\t5\t6\tx,-,-,-\tg\t2*5,3*5\t0\n"
        "69\t85\t1a\t5^6*17^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "70\t86\t1b\t5^2*2^4*43^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "71\t87\t1b\t5^2*3^4*29^4\t3\t1\t1\t3\t4\t-,ox,-,-\tb2\t29,L\t0\n"
        "72\t88\t1b\t5^2*2^4*11^4\t3\t2\t2\t4\t1\t-,-,ox,-\ta2\tK,K2\t0\n"
        "73\t89\t1b\t5^2*89^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tL\t0\n"
        "74\t90\t1a\t5^6*2^4*3^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "75\t91\t1b\t5^2*7^4*13^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "76\t92\t1b\t5^2*2^4*23^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "77\t93\t2\t3^4*31^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tK,K1\t0\n"
        "78\t94\t1b\t5^2*2^4*47^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "79\t95\t1a\t5^6*19^4\t4\t1\t1\t2\t3\t-,ox,-,-\td2\tK\t1\n"
        "80\t97\t1b\t5^2*97^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "81\t99\t2\t3^4*11^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tK,K1\t0\n"
        "82\t101\t2\t101^4\t1\t1\t2\t4\t5\t-,-,ox,ox\tz1\tK2\t1\n"
        "83\t102\t1b\t5^2*2^4*3^4*17^4\t13\t1\t2\t5\t6\tx,-,-,-\tg\t2,3*5\t0\n"
        "84\t103\t1b\t5^2*103^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "85\t104\t1b\t5^2*2^4*13^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "86\t105\t1a\t5^6*3^4*7^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "87\t106\t1b\t5^2*2^4*53^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "88\t107\t2\t107^4\t1\t0\t0\t0\t5\t-,-,-,ox\tth\t\t0\n"
        "89\t109\t1b\t5^2*109^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tL\t0\n"
        "90\t110\t1a\t5^6*2^4*11^4\t16\t1\t1\t3\t4\t-,-,(x),-\tb2\t11,L\t1\n"
        "91\t111\t1b\t5^2*3^4*37^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "92\t112\t1b\t5^2*2^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "93\t113\t1b\t5^2*113^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "94\t114\t1b\t5^2*2^4*3^4*19^4\t13\t1\t2\t5\t6\t-,x,-,-\tg\t2*5^3,3*5^3\t1\n"
        "95\t115\t1a\t5^6*23^4\t4\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "96\t116\t1b\t5^2*2^4*29^4\t3\t1\t1\t3\t4\t-,ox,-,-\tb2\t29*5,K\t0\n"
        "97\t117\t1b\t5^2*3^4*13^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "98\t118\t2\t2^4*59^4\t1\t1\t1\t2\t3\t-,ox,-,-\td2\tK\t0\n"
        "99\t119\t1b\t5^2*7^4*17^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "100\t120\t1a\t5^6*2^4*3^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "101\t122\t1b\t5^2*2^4*61^4\t3\t1\t1\t3\t4\t-,-,(x),-\tb2\t61*5^3,K\t0\n"
        "102\t123\t1b\t5^2*3^4*41^4\t3\t2\t3\t6\t3\t-,-,ox,-\ta2\tK,K2\t1\n"
        "103\t124\t2\t2^4*31^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tK,K1\t0\n"
        "104\t126\t2\t2^4*3^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t1\n"
        "105\t127\t1b\t5^2*127^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "106\t129\t1b\t5^2*3^4*43^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "107\t130\t1a\t5^6*2^4*13^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "108\t131\t1b\t5^2*131^4\t1\t2\t2\t4\t1\t-,-,ox,-\ta2\tL,K2\t1\n"
        "109\t132\t2\t2^4*3^4*11^4\t3\t1\t1\t3\t4\t-,-,(x),-\tb2\t11,L\t1\n"
        "110\t133\t1b\t5^2*7^4*19^4\t4\t1\t1\t3\t4\t-,ox,-,-\tb2\t7,L\t1\n"
        "111\t134\t1b\t5^2*2^4*67^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "112\t136\t1b\t5^2*2^4*17^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "113\t137\t1b\t5^2*137^4\t1\t0\t0\t0\t5\tx,-,-,-\te\t\t0\n"
        "114\t138\t1b\t5^2*2^4*3^4*23^4\t13\t1\t2\t5\t6\tx,-,-,-\tg\t2*5^2,3\t0\n"
        "115\t139\t1b\t5^2*139^4\t1\t1\t1\t3\t4\t-,ox,-,-\tb2\t5,L\t1\n"
        "116\t140\t1a\t5^6*2^4*7^4\t16\t1\t2\t4\t5\tx,-,-,-\te\t7\t1\n"
        "117\t141\t1b\t5^2*3^4*47^4\t3\t1\t2\t4\t5\tx,-,-,-\te\t47*5\t1\n"
        "118\t142\t1b\t5^2*2^4*71^4\t3\t1\t1\t3\t4\t-,-,(x),-\tb2\t71*5^2,K\t0\n"
        "119\t143\t2\t11^4*13^4\t1\t1\t1\t2\t3\t-,-,ox,-\ta2\tK,K1\t0\n"
        "120\t145\t1a\t5^6*29^4\t4\t1\t1\t2\t3\t-,ox,-,-\td2\tK\t0\n"
        "121\t146\t1b\t5^2*2^4*73^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "122\t147\t1b\t5^2*3^4*7^4\t4\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "123\t148\t1b\t5^2*2^4*37^4\t3\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n"
        "124\t149\t2\t149^4\t1\t1\t1\t2\t3\t-,ox,-,x\td2\tL\t1\n"
        "125\t150\t1a\t5^6*2^4*3^4\t16\t0\t0\t1\t6\tx,-,-,-\tg\t\t0\n";
}

}  // namespace quintic
