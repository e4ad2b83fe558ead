import os
import poly as P, cx, arcs, itertools, t3check
OUT=os.path.join(os.path.dirname(os.path.abspath(__file__)),'..','..','data','blocks')
T,O,CU=P.tetrahedron(),P.octahedron(),P.cuboctahedron()
def inv(m): return {v:k for k,v in m.items()}
def mk(pairs):
    g={}
    for (p,f),(q,h),m in pairs: g[(p,f)]=(q,h,m); g[(q,h)]=(p,f,inv(m))
    return g
def fm(sh,a,b,s): return P.face_maps(sh['faces'][a],sh['faces'][b])[s]
class Any:
    def __eq__(s,o): return True
    def __ne__(s,o): return False
A=Any()
def t53():
    g=mk([((0,2),(0,4),{0:2,3:1,4:4}),((0,1),(0,7),{0:3,2:1,5:5})])
    return cx.Complex([O],g,{(0,3):0,(0,5):0,(0,0):0,(0,6):0}),[1,1,1,0],dict(q3=4,loop=1,sheet=A),None
def t1():
    # mirrored copies relabelled by the reflection x -> -x so every copy uses the standard octahedron
    copies=[(1,1),(1,-1),(-1,1),(-1,-1)]
    sig=[{v:v for v in range(6)} if a*b>0 else {0:1,1:0,2:2,3:3,4:4,5:5} for a,b in copies]
    def fidx(p,f):
        vs={sig[p][v] for v in O['faces'][f]}
        return next(i for i,h in enumerate(O['faces']) if set(h)==vs)
    pairs=[]
    for f in (1,7): pairs+= [((0,f),(2,f)),((1,f),(3,f))]
    for f in (2,4): pairs+= [((0,f),(1,f)),((2,f),(3,f))]
    g=mk([((p,fidx(p,f)),(q,fidx(q,h)),{sig[p][v]:sig[q][v] for v in O['faces'][f]}) for (p,f),(q,h) in pairs])
    bnd={(p,fidx(p,f)):0 for p in range(4) for f in (3,0,5,6)}
    return cx.Complex([O]*4,g,bnd),[0,0,0,0],dict(q0=4,q1=4,q2=4,q3=4,sheet=2,loop=A),['++','+-','-+','--']
def t2():
    M=[(0,1),(2,3),(4,6),(5,7)]
    g=mk([((0,a),(0,b),fm(CU,a,b,2)) for a,b in M])
    return cx.Complex([CU],g,{(0,s):0 for s in range(8,14)}),[1,0,0,0],dict(q1=2,q2=4,q3=2,sheet=1,loop=A),None
def t42():
    M=[((0,1),(0,2)),((0,4),(1,1)),((0,7),(1,2)),((1,4),(1,7))]
    g=mk([((p,a),(q,b),fm(O,a,b,2)) for (p,a),(q,b) in M])
    return cx.Complex([O,O],g,{(p,f):0 for p in range(2) for f in (0,3,5,6)}),[1,1,0,0],dict(q2=4,q3=4,sheet=1,loop=2),None
def t3():
    G=[[(7,(2,1,0,3)),(6,(0,2,1,3)),'B',(4,(1,2,3,0))],['B',(8,(1,0,2,3)),(5,(0,2,1,3)),(4,(2,0,3,1))],[(8,(1,0,2,3)),'B',(5,(2,1,0,3)),(4,(0,1,3,2))],[(6,(1,0,2,3)),(7,(1,0,2,3)),'B',(4,(2,1,0,3))],[(0,(3,0,1,2)),(1,(1,3,0,2)),(2,(0,1,3,2)),(3,(2,1,0,3))],[(2,(2,1,0,3)),(1,(0,2,1,3)),'B',(9,(1,2,3,0))],['B',(3,(1,0,2,3)),(0,(0,2,1,3)),(9,(2,0,3,1))],[(3,(1,0,2,3)),'B',(0,(2,1,0,3)),(9,(0,1,3,2))],[(1,(1,0,2,3)),(2,(1,0,2,3)),'B',(9,(2,1,0,3))],[(5,(3,0,1,2)),(6,(1,3,0,2)),(7,(0,1,3,2)),(8,(2,1,0,3))]]
    # face i of the census numbering is the face opposite vertex i; translate to the ccw face list
    fi={i:next(k for k,f in enumerate(T['faces']) if i not in f) for i in range(4)}
    g={}; b={}
    for t,row in enumerate(G):
        for i,x in enumerate(row):
            if x=='B': b[(t,fi[i])]=0
            else: g[(t,fi[i])]=(x[0],fi[x[1][i]],{v:x[1][v] for v in range(4) if v!=i})
    return cx.Complex([T]*10,g,b),[1,0,1,0],dict(q1=A,q3=A,sheet=A,loop=A),None
def prong(slot,pr):
    if pr[0]=='u': return pr
    q=int(pr[1:]); return 'qL' if q==slot else 'qR'
NAMES={'T1':t1,'T2':t2,'T3':t3,'T4_2':t42,'T5_3':t53}
def export(name):
    C,ext,L,copies=NAMES[name]()
    assert not C.angle_report()
    s2slot,lab,Pu=arcs.match(C,ext,L)
    punct=C.punctures()
    corner={}
    for k,pc in enumerate(punct):
        sl,pr=lab[k]
        for (p,f,v) in pc: corner[(p,f,v)]=(sl,prong(sl,pr))
    shape=C.polys[0]['name']
    out=['# block '+name, 'type '+name, 'external '+' '.join(str(int(x)) for x in ext), 'polyhedra %s %d'%(shape,len(C.polys))]
    if copies: out.append('copies '+' '.join(copies))
    out.append('# glue P F Q G then the image of each vertex of face F, in face order')
    for (p,f),(q,h,m) in sorted(C.glue.items()):
        if (p,f)<(q,h):
            out.append('glue %d %d %d %d '%(p,f,q,h)+' '.join('%d>%d'%(v,m[v]) for v in C.polys[p]['faces'][f]))
    out.append('# boundary P F slot then the prong at each vertex of face F, in face order')
    for (p,f) in sorted(C.bnd):
        sl=corner[(p,f,C.polys[p]['faces'][f][0])][0]
        out.append('boundary %d %d %d '%(p,f,sl)+' '.join('%d=%s'%(v,corner[(p,f,v)][1]) for v in C.polys[p]['faces'][f]))
    open(os.path.join(OUT,'%s.blk'%name),'w').write('\n'.join(out)+'\n')
    return C
if __name__=='__main__':
    for n in NAMES:
        C=export(n); print(n,'chi',C.euler_truncated(),'spheres',sorted(len(s) for s in C.sphere_components()), 'cusps', sorted(len(c) for c in C.cusps()[0]))
